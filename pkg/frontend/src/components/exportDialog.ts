import type { Api } from "../api.js";
import type { UiSessionState } from "../state.js";

// Collapsible export container. Expanding it the first time reveals the
// name and course inputs; exporting is blocked until both are filled and
// the session has at least one completed turn.

export function createExportDialog(state: UiSessionState, api: Api): HTMLDetailsElement {
  const details = document.createElement("details");
  details.className = "export-dialog";

  const summary = document.createElement("summary");
  summary.textContent = "Export chat to PDF";
  details.appendChild(summary);

  const form = document.createElement("form");
  form.innerHTML = `
    <label>Your name <input name="student_name" type="text" /></label>
    <label>Course number <input name="course_number" type="text" /></label>
    <button type="submit" class="export-button">Download PDF</button>
    <p class="export-error" hidden></p>
  `;
  details.appendChild(form);

  const nameInput = form.querySelector<HTMLInputElement>("[name=student_name]")!;
  const courseInput = form.querySelector<HTMLInputElement>("[name=course_number]")!;
  const button = form.querySelector<HTMLButtonElement>(".export-button")!;
  const error = form.querySelector<HTMLParagraphElement>(".export-error")!;

  function refresh(): void {
    // nothing to export before the first completed turn
    button.disabled = state.messages.length < 2;
  }
  details.addEventListener("toggle", refresh);
  refresh();

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void (async () => {
      error.hidden = true;
      const name = nameInput.value.trim();
      const course = courseInput.value.trim();
      if (!name || !course) {
        error.textContent = "Please enter both your name and the course number.";
        error.hidden = false;
        return;
      }
      if (!state.sessionId) return;
      state.exportForm = { name, courseNumber: course };
      try {
        const blob = await api.exportPdf(state.sessionId, name, course);
        const url = URL.createObjectURL(blob);
        const anchor = document.createElement("a");
        anchor.href = url;
        anchor.download = `${name}'s Interaction with ChatISA.pdf`;
        anchor.click();
        URL.revokeObjectURL(url);
      } catch (exportError) {
        error.textContent =
          exportError instanceof Error ? exportError.message : String(exportError);
        error.hidden = false;
      }
    })();
  });

  // let the page refresh the disabled state after each turn
  (details as HTMLDetailsElement & { refreshExportState?: () => void })
    .refreshExportState = refresh;
  return details;
}
