import type { ModelEntry } from "../api.js";
import { MODULE_INFO } from "../assets/sidebarText.js";

export interface SidebarOptions {
  moduleKind: string;
  models: ModelEntry[]; // from the API, never hardcoded
  selected: string;
  onModelChange: (modelId: string) => void;
}

export function renderSidebar(container: HTMLElement, options: SidebarOptions): void {
  const info = MODULE_INFO[options.moduleKind];
  container.innerHTML = `
    <h1 class="app-name">ChatISA</h1>
    <h2 class="module-title">${info.title}</h2>
    <p class="module-description">${info.description}</p>
    <h3>Benefits</h3>
    <ul class="benefits">${info.benefits.map((b) => `<li>${b}</li>`).join("")}</ul>
    <h3>Limitations</h3>
    <ul class="limitations">${info.limitations.map((l) => `<li>${l}</li>`).join("")}</ul>
    <label class="model-label" for="model-select">Language model</label>
  `;

  const select = document.createElement("select");
  select.id = "model-select";
  select.className = "model-select";
  for (const model of options.models) {
    const option = document.createElement("option");
    option.value = model.model_id;
    option.textContent = model.display_name;
    if (model.model_id === options.selected) option.selected = true;
    select.appendChild(option);
  }
  select.addEventListener("change", () => options.onModelChange(select.value));
  container.appendChild(select);
}
