import { ApiError, type Api } from "./api.js";
import { initialState, type UiSessionState } from "./state.js";
import { createChatPane, renderMessages } from "./components/chat.js";
import { createExamSetup } from "./components/examSetup.js";
import { createExportDialog } from "./components/exportDialog.js";
import { createInterviewSetup } from "./components/interviewSetup.js";
import { renderSidebar } from "./components/sidebar.js";
import { createVoiceControl } from "./components/voice.js";

export const PROJECT_ROLES: Array<[string, string]> = [
  ["project_scoping_coach", "Scoping Coach"],
  ["premortem_coach", "Premortem Coach"],
  ["team_structuring_coach", "Team Structuring Coach"],
  ["devils_advocate", "Devil's Advocate"],
  ["reflection_coach", "Reflection Coach"],
];

// Every module page shares one look: sidebar on the left (app info,
// benefits/limitations, model dropdown), chat pane on the right with the
// input bar at the bottom. Exam and interview pages put a setup form in
// front of the chat; the project page adds a role selector.
export async function pageLayout(
  moduleKind: string,
  api: Api,
  root: HTMLElement,
): Promise<UiSessionState> {
  root.innerHTML = "";
  const state = initialState(moduleKind);

  const banner = document.createElement("div");
  banner.className = "error-banner";
  banner.hidden = true;
  root.appendChild(banner);

  const shell = document.createElement("div");
  shell.className = "layout";
  const sidebar = document.createElement("aside");
  sidebar.className = "sidebar";
  const mainPane = document.createElement("main");
  mainPane.className = "main-pane";
  shell.append(sidebar, mainPane);
  root.appendChild(shell);

  const chat = createChatPane(state, api);
  const exportDialog = createExportDialog(state, api);

  let models;
  try {
    models = await api.listModels(moduleKind);
  } catch (error) {
    banner.textContent = error instanceof ApiError
      ? `Service error: ${error.message}`
      : "The ChatISA service is unreachable. Please try again later.";
    banner.hidden = false;
    chat.input.disabled = true;
    chat.sendButton.disabled = true;
    root.appendChild(shell);
    mainPane.appendChild(chat.root);
    return state;
  }
  state.selectedModel = models[0]?.model_id ?? "";

  renderSidebar(sidebar, {
    moduleKind,
    models,
    selected: state.selectedModel,
    onModelChange: (modelId) => {
      state.selectedModel = modelId;
      if (state.sessionId) void api.switchModel(state.sessionId, modelId);
    },
  });

  const beginChat = async (bindings: Record<string, string>, role?: string) => {
    state.sessionId = await api.createSession({
      module: moduleKind,
      model_id: state.selectedModel,
      bindings,
      role,
    });
    mainPane.innerHTML = "";
    mainPane.appendChild(chat.root);
    mainPane.appendChild(exportDialog);
    renderMessages(chat.root.querySelector(".message-list")!, state.messages);
  };

  if (moduleKind === "exam") {
    const setup = createExamSetup(api, (result) => {
      void beginChat({
        course_document_id: result.documentId,
        exam_type: result.examType,
      });
    });
    mainPane.appendChild(setup);
  } else if (moduleKind === "interview") {
    const setup = createInterviewSetup(api, (result) => {
      void (async () => {
        await beginChat({
          grade: result.grade,
          major: result.major,
          job_title: result.jobTitle,
          job_description: result.jobDescription,
          resume_document_id: result.resumeDocumentId,
        });
        // voice capture is scoped to the Interview Mentor page only
        const voice = createVoiceControl((text) => {
          chat.input.value = text;
          chat.input.focus();
        });
        chat.root.querySelector(".input-bar")!.appendChild(voice);
      })();
    });
    mainPane.appendChild(setup);
  } else if (moduleKind === "project") {
    const picker = document.createElement("form");
    picker.className = "role-picker";
    picker.innerHTML = `
      <h3>Choose your coach</h3>
      <select class="project-role">
        ${PROJECT_ROLES.map(([id, label]) => `<option value="${id}">${label}</option>`).join("")}
      </select>
      <button type="submit" class="start-chat">Start</button>
    `;
    picker.addEventListener("submit", (event) => {
      event.preventDefault();
      const role = picker.querySelector<HTMLSelectElement>(".project-role")!.value;
      void beginChat({}, role);
    });
    mainPane.appendChild(picker);
  } else {
    await beginChat({});
  }

  return state;
}
