import type { Api, ChatMessage } from "../api.js";
import type { UiSessionState } from "../state.js";

// Chat pane: message list above, input bar pinned at the bottom. The send
// path streams the reply, then reconciles the rendered list against the
// server's session record so the mirror can never drift.

export function renderMessages(list: HTMLElement, messages: ChatMessage[]): void {
  list.innerHTML = "";
  for (const message of messages) {
    const item = document.createElement("div");
    item.className = `message message-${message.role}`;
    item.textContent = message.content;
    list.appendChild(item);
  }
}

export interface ChatPane {
  root: HTMLElement;
  input: HTMLTextAreaElement;
  sendButton: HTMLButtonElement;
  send: () => Promise<void>;
}

export function createChatPane(state: UiSessionState, api: Api): ChatPane {
  const root = document.createElement("div");
  root.className = "chat-pane";

  const list = document.createElement("div");
  list.className = "message-list";
  root.appendChild(list);

  const streaming = document.createElement("div");
  streaming.className = "message message-assistant streaming";
  streaming.hidden = true;
  root.appendChild(streaming);

  const bar = document.createElement("form");
  bar.className = "input-bar";
  const input = document.createElement("textarea");
  input.className = "prompt-input";
  input.placeholder = "Type your message";
  const sendButton = document.createElement("button");
  sendButton.type = "submit";
  sendButton.className = "send-button";
  sendButton.textContent = "Send";
  bar.append(input, sendButton);
  root.appendChild(bar);

  const errorLine = document.createElement("p");
  errorLine.className = "chat-error";
  errorLine.hidden = true;
  root.appendChild(errorLine);

  function setPending(pending: boolean): void {
    state.pending = pending;
    input.disabled = pending;
    sendButton.disabled = pending;
  }

  async function send(): Promise<void> {
    const text = input.value.trim();
    if (!text || state.pending || !state.sessionId) return;
    errorLine.hidden = true;
    setPending(true);
    input.value = "";
    state.messages.push({ role: "user", content: text });
    renderMessages(list, state.messages);
    streaming.hidden = false;
    streaming.textContent = "";
    try {
      await api.postMessage(state.sessionId, text, (chunk) => {
        streaming.textContent += chunk;
      });
      // Reconcile with the server record; the mirror must match it exactly.
      const record = await api.getSession(state.sessionId);
      state.messages = record.messages;
      renderMessages(list, state.messages);
    } catch (error) {
      state.messages.pop(); // the turn did not happen server-side
      renderMessages(list, state.messages);
      errorLine.textContent = error instanceof Error ? error.message : String(error);
      errorLine.hidden = false;
    } finally {
      streaming.hidden = true;
      streaming.textContent = "";
      setPending(false);
    }
  }

  bar.addEventListener("submit", (event) => {
    event.preventDefault();
    void send();
  });

  return { root, input, sendButton, send };
}
