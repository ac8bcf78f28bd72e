import { ApiError, type Api, type UploadResult } from "../api.js";
import { readFileBytes } from "./fileBytes.js";

export const EXAM_STYLES = [
  "Conceptual Multiple Choice",
  "Conceptual Short Answer",
  "Code Understanding",
  "Data Analysis",
];

export interface ExamSetupResult {
  documentId: string;
  examType: string;
}

// Exam Ally requires a readable course PDF before the chat can start: the
// start button stays disabled until an upload succeeds.
export function createExamSetup(
  api: Api,
  onReady: (setup: ExamSetupResult) => void,
): HTMLElement {
  const form = document.createElement("form");
  form.className = "exam-setup";
  form.innerHTML = `
    <h3>Before you start</h3>
    <label>Course materials (PDF)
      <input type="file" accept="application/pdf" class="course-upload" />
    </label>
    <p class="upload-status" hidden></p>
    <label>Question style
      <select class="exam-style">
        ${EXAM_STYLES.map((s) => `<option value="${s}">${s}</option>`).join("")}
      </select>
    </label>
    <button type="submit" class="start-chat" disabled>Start chat</button>
  `;

  const fileInput = form.querySelector<HTMLInputElement>(".course-upload")!;
  const status = form.querySelector<HTMLParagraphElement>(".upload-status")!;
  const styleSelect = form.querySelectorAll("select.exam-style")[0] as HTMLSelectElement;
  const startButton = form.querySelector<HTMLButtonElement>(".start-chat")!;

  let uploaded: UploadResult | null = null;

  async function handleFile(file: File): Promise<void> {
    status.hidden = false;
    status.className = "upload-status";
    status.textContent = `Uploading ${file.name}...`;
    uploaded = null;
    startButton.disabled = true;
    try {
      uploaded = await api.uploadDocument(await readFileBytes(file), file.name);
      status.textContent =
        `Ready: ${file.name} (${uploaded.page_count} pages, ${uploaded.char_count} characters).`;
      startButton.disabled = false;
    } catch (error) {
      status.className = "upload-status upload-error";
      status.textContent = error instanceof ApiError && error.code === "unreadable_document"
        ? "That PDF has no readable text (it may be a scan). Please upload a readable PDF."
        : `Upload failed: ${error instanceof Error ? error.message : String(error)}`;
    }
  }

  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (file) void handleFile(file);
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (!uploaded) return; // no chat before a successful upload
    onReady({ documentId: uploaded.document_id, examType: styleSelect.value });
  });

  return form;
}
