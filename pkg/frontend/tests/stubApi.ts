// In-memory Api stand-in: no network, deterministic replies, call counters.

import type {
  Api,
  CreateSessionBody,
  ModelEntry,
  SessionRecord,
  UploadResult,
  UsageEvent,
} from "../src/api.js";
import { ApiError } from "../src/api.js";

export const FRONTIER_MODELS: ModelEntry[] = [
  { model_id: "gpt-4o", display_name: "GPT-4o", tier: "frontier" },
  { model_id: "claude-3-7-sonnet-20250219", display_name: "Claude 3.7 Sonnet", tier: "frontier" },
  { model_id: "command-r-plus", display_name: "Command R+", tier: "frontier" },
  { model_id: "llama3.3-70b-versatile", display_name: "Llama 3.3 70B Versatile", tier: "frontier" },
];

export const ALL_MODELS: ModelEntry[] = [
  ...FRONTIER_MODELS,
  { model_id: "gpt-4o-mini", display_name: "GPT-4o mini", tier: "light" },
  { model_id: "gemma2-9b-it", display_name: "Gemma 2 9B", tier: "light" },
  { model_id: "llama3.1-8b-INSTANT", display_name: "Llama 3.1 8B Instant", tier: "light" },
];

export class StubApi implements Api {
  calls = { listModels: 0, createSession: 0, postMessage: 0, upload: 0, export: 0, switch: 0 };
  lastCreateBody: CreateSessionBody | null = null;
  replyChunks = ["Hello ", "from ", "the stub"];
  serverRecord: SessionRecord | null = null;
  failModels = false;
  failUploadUnreadable = false;
  pendingDuringStream = false;
  onMidStream: (() => void) | null = null;

  async listModels(module: string): Promise<ModelEntry[]> {
    this.calls.listModels += 1;
    if (this.failModels) throw new ApiError("upstream", "service unreachable");
    return module === "exam" || module === "interview" ? FRONTIER_MODELS : ALL_MODELS;
  }

  async createSession(body: CreateSessionBody): Promise<string> {
    this.calls.createSession += 1;
    this.lastCreateBody = body;
    this.serverRecord = {
      session_id: "stub-session",
      module_kind: body.module,
      model_id: body.model_id,
      temperature: 0,
      messages: [],
    };
    return "stub-session";
  }

  async getSession(): Promise<SessionRecord> {
    if (!this.serverRecord) throw new ApiError("not_found", "no session");
    return JSON.parse(JSON.stringify(this.serverRecord));
  }

  async postMessage(
    _sessionId: string,
    text: string,
    onChunk: (content: string) => void,
  ): Promise<UsageEvent> {
    this.calls.postMessage += 1;
    for (const chunk of this.replyChunks) {
      this.onMidStream?.();
      onChunk(chunk);
      await Promise.resolve();
    }
    // the server record is the source of truth the UI must reconcile with
    this.serverRecord!.messages.push(
      { role: "user", content: text },
      { role: "assistant", content: this.replyChunks.join("") },
    );
    return {
      type: "usage", model_id: "gpt-4o",
      input_tokens: 10, output_tokens: 5, usage_estimated: false,
    };
  }

  async switchModel(): Promise<void> {
    this.calls.switch += 1;
  }

  async uploadDocument(): Promise<UploadResult> {
    this.calls.upload += 1;
    if (this.failUploadUnreadable) {
      throw new ApiError("unreadable_document", "no extractable text");
    }
    return { document_id: "d".repeat(64), char_count: 1234, page_count: 3 };
  }

  async exportPdf(): Promise<Blob> {
    this.calls.export += 1;
    return new Blob([new Uint8Array([0x25, 0x50, 0x44, 0x46])], { type: "application/pdf" });
  }
}

export async function flush(times = 6): Promise<void> {
  for (let i = 0; i < times; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function attachFile(input: HTMLInputElement, name = "notes.pdf"): void {
  const file = new File([new Uint8Array([0x25, 0x50, 0x44, 0x46, 0x2d])], name, {
    type: "application/pdf",
  });
  Object.defineProperty(input, "files", {
    configurable: true,
    value: { 0: file, length: 1, item: () => file },
  });
  input.dispatchEvent(new Event("change"));
}
