import { ApiClient } from "./api.js";
import { MODULE_KINDS } from "./assets/sidebarText.js";
import { pageLayout } from "./pages.js";

// Hash-routed single-page app: #/coding, #/project, #/exam, #/interview.

function currentModule(): string {
  const fragment = window.location.hash.replace(/^#\//, "");
  return MODULE_KINDS.includes(fragment) ? fragment : "coding";
}

export function startApp(root: HTMLElement, api = new ApiClient()): void {
  const nav = document.createElement("nav");
  nav.className = "module-nav";
  nav.innerHTML = MODULE_KINDS
    .map((kind) => `<a href="#/${kind}" data-module="${kind}">${kind}</a>`)
    .join("");
  const outlet = document.createElement("div");
  outlet.className = "page-outlet";
  root.append(nav, outlet);

  const render = () => {
    void pageLayout(currentModule(), api, outlet);
  };
  window.addEventListener("hashchange", render);
  render();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  startApp(document.getElementById("app")!);
}
