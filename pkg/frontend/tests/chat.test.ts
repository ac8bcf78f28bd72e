import { beforeEach, describe, expect, it } from "vitest";

import { createChatPane } from "../src/components/chat.js";
import { initialState } from "../src/state.js";
import { StubApi, flush } from "./stubApi.js";

beforeEach(() => {
  document.body.innerHTML = "";
});

function rendered(pane: HTMLElement): Array<{ role: string; content: string }> {
  return Array.from(pane.querySelectorAll(".message-list .message")).map((el) => ({
    role: el.classList.contains("message-user") ? "user" : "assistant",
    content: el.textContent ?? "",
  }));
}

describe("chat pane", () => {
  it("reconciles the rendered list with the server record after each stream", async () => {
    const api = new StubApi();
    const state = initialState("coding");
    state.sessionId = await api.createSession({
      module: "coding", model_id: "gpt-4o", bindings: {},
    });
    const pane = createChatPane(state, api);
    document.body.appendChild(pane.root);

    pane.input.value = "first question";
    await pane.send();
    expect(rendered(pane.root)).toEqual(api.serverRecord!.messages);

    pane.input.value = "second question";
    await pane.send();
    expect(rendered(pane.root)).toEqual(api.serverRecord!.messages);
    expect(api.serverRecord!.messages).toHaveLength(4);
  });

  it("disables the input bar while a stream is pending", async () => {
    const api = new StubApi();
    const state = initialState("coding");
    state.sessionId = await api.createSession({
      module: "coding", model_id: "gpt-4o", bindings: {},
    });
    const pane = createChatPane(state, api);
    document.body.appendChild(pane.root);

    let duringStream: boolean | null = null;
    api.onMidStream = () => {
      duringStream = pane.input.disabled && state.pending;
    };
    pane.input.value = "hello";
    await pane.send();
    expect(duringStream).toBe(true);
    expect(pane.input.disabled).toBe(false); // released after completion
    expect(state.pending).toBe(false);
  });

  it("drops the optimistic user message when the turn fails", async () => {
    const api = new StubApi();
    const state = initialState("coding");
    state.sessionId = await api.createSession({
      module: "coding", model_id: "gpt-4o", bindings: {},
    });
    api.postMessage = async () => {
      throw new Error("scripted outage");
    };
    const pane = createChatPane(state, api);
    document.body.appendChild(pane.root);

    pane.input.value = "doomed";
    await pane.send();
    await flush();
    expect(rendered(pane.root)).toEqual([]);
    const error = pane.root.querySelector<HTMLElement>(".chat-error")!;
    expect(error.hidden).toBe(false);
    expect(error.textContent).toContain("scripted outage");
  });

  it("ignores sends while pending or without a session", async () => {
    const api = new StubApi();
    const state = initialState("coding");
    const pane = createChatPane(state, api);
    pane.input.value = "no session yet";
    await pane.send();
    expect(api.calls.postMessage).toBe(0);
  });
});
