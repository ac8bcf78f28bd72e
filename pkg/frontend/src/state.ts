import type { ChatMessage } from "./api.js";

// Mirror of one server session plus the client-only pending flag. While
// pending is true the input bar stays disabled: one in-flight message per
// session, matching the server's per-session serialization.
export interface UiSessionState {
  sessionId: string | null;
  moduleKind: string;
  selectedModel: string;
  messages: ChatMessage[];
  pending: boolean;
  exportForm: { name: string; courseNumber: string };
}

export function initialState(moduleKind: string): UiSessionState {
  return {
    sessionId: null,
    moduleKind,
    selectedModel: "",
    messages: [],
    pending: false,
    exportForm: { name: "", courseNumber: "" },
  };
}
