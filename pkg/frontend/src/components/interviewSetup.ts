import { ApiError, type Api, type UploadResult } from "../api.js";
import { readFileBytes } from "./fileBytes.js";

export const GRADES = ["freshman", "sophomore", "junior", "senior", "graduate"];
export const MAJORS = [
  "Business Analytics",
  "Information Systems",
  "Computer Science",
  "Finance",
  "Marketing",
  "Other",
];

export interface InterviewSetupResult {
  grade: string;
  major: string;
  jobTitle: string;
  jobDescription: string;
  resumeDocumentId: string;
}

// Interview Mentor collects the most inputs of any module: grade and major
// dropdowns, job title and description text, and a resume PDF. The start
// button unlocks only when everything is present.
export function createInterviewSetup(
  api: Api,
  onReady: (setup: InterviewSetupResult) => void,
): HTMLElement {
  const form = document.createElement("form");
  form.className = "interview-setup";
  form.innerHTML = `
    <h3>Before your mock interview</h3>
    <label>Grade
      <select class="grade">${GRADES.map((g) => `<option>${g}</option>`).join("")}</select>
    </label>
    <label>Major
      <select class="major">${MAJORS.map((m) => `<option>${m}</option>`).join("")}</select>
    </label>
    <label>Job title <input type="text" class="job-title" /></label>
    <label>Job description (paste from the posting)
      <textarea class="job-description"></textarea>
    </label>
    <label>Resume (PDF)
      <input type="file" accept="application/pdf" class="resume-upload" />
    </label>
    <p class="upload-status" hidden></p>
    <button type="submit" class="start-chat" disabled>Start interview</button>
  `;

  const gradeSelect = form.querySelector<HTMLSelectElement>(".grade")!;
  const majorSelect = form.querySelector<HTMLSelectElement>(".major")!;
  const titleInput = form.querySelector<HTMLInputElement>(".job-title")!;
  const descriptionInput = form.querySelector<HTMLTextAreaElement>(".job-description")!;
  const fileInput = form.querySelector<HTMLInputElement>(".resume-upload")!;
  const status = form.querySelector<HTMLParagraphElement>(".upload-status")!;
  const startButton = form.querySelector<HTMLButtonElement>(".start-chat")!;

  let uploaded: UploadResult | null = null;

  function refresh(): void {
    startButton.disabled = !(
      uploaded && titleInput.value.trim() && descriptionInput.value.trim()
    );
  }
  titleInput.addEventListener("input", refresh);
  descriptionInput.addEventListener("input", refresh);

  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    void (async () => {
      status.hidden = false;
      status.className = "upload-status";
      status.textContent = `Uploading ${file.name}...`;
      uploaded = null;
      refresh();
      try {
        uploaded = await api.uploadDocument(await readFileBytes(file), file.name);
        status.textContent = `Resume ready (${uploaded.page_count} pages).`;
      } catch (error) {
        status.className = "upload-status upload-error";
        status.textContent = error instanceof ApiError && error.code === "unreadable_document"
          ? "That PDF has no readable text (it may be a scan). Please upload a readable PDF."
          : `Upload failed: ${error instanceof Error ? error.message : String(error)}`;
      }
      refresh();
    })();
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (startButton.disabled || !uploaded) return;
    onReady({
      grade: gradeSelect.value,
      major: majorSelect.value,
      jobTitle: titleInput.value.trim(),
      jobDescription: descriptionInput.value.trim(),
      resumeDocumentId: uploaded.document_id,
    });
  });

  return form;
}
