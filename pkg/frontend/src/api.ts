// Typed client for the chatisa HTTP API. The UI talks to the service only
// through this module; nothing else issues requests.

export interface ModelEntry {
  model_id: string;
  display_name: string;
  tier: string;
}

export interface ChatMessage {
  role: "user" | "assistant";
  content: string;
}

export interface SessionRecord {
  session_id: string;
  module_kind: string;
  model_id: string;
  temperature: number;
  messages: ChatMessage[];
}

export interface UsageEvent {
  type: "usage";
  model_id: string;
  input_tokens: number;
  output_tokens: number;
  usage_estimated: boolean;
}

export interface UploadResult {
  document_id: string;
  char_count: number;
  page_count: number;
}

export interface CreateSessionBody {
  module: string;
  model_id: string;
  bindings: Record<string, string>;
  role?: string;
}

export class ApiError extends Error {
  code: string;
  details: Record<string, unknown>;

  constructor(code: string, message: string, details: Record<string, unknown> = {}) {
    super(message);
    this.code = code;
    this.details = details;
  }
}

async function raiseFor(response: Response): Promise<never> {
  let code = "upstream";
  let message = `HTTP ${response.status}`;
  let details: Record<string, unknown> = {};
  try {
    const body = await response.json();
    if (body && body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
      details = body.error.details ?? {};
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(code, message, details);
}

// Splits a streamed byte sequence into parsed NDJSON events. Chunks may cut
// a line anywhere; the trailing partial line is carried between reads.
export async function* parseNdjson(
  chunks: AsyncIterable<Uint8Array>,
): AsyncGenerator<Record<string, unknown>> {
  const decoder = new TextDecoder();
  let buffer = "";
  for await (const chunk of chunks) {
    buffer += decoder.decode(chunk, { stream: true });
    let newline = buffer.indexOf("\n");
    while (newline !== -1) {
      const line = buffer.slice(0, newline).trim();
      buffer = buffer.slice(newline + 1);
      if (line) yield JSON.parse(line);
      newline = buffer.indexOf("\n");
    }
  }
  const tail = buffer.trim();
  if (tail) yield JSON.parse(tail);
}

async function* readBody(response: Response): AsyncIterable<Uint8Array> {
  const reader = response.body?.getReader();
  if (!reader) return;
  for (;;) {
    const { done, value } = await reader.read();
    if (done) return;
    if (value) yield value;
  }
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) await raiseFor(response);
    return response;
  }

  async listModels(module: string): Promise<ModelEntry[]> {
    const response = await this.request(`/api/models?module=${encodeURIComponent(module)}`);
    return response.json();
  }

  async createSession(body: CreateSessionBody): Promise<string> {
    const response = await this.request("/api/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const parsed = await response.json();
    return parsed.session_id;
  }

  async getSession(sessionId: string): Promise<SessionRecord> {
    const response = await this.request(`/api/sessions/${sessionId}`);
    return response.json();
  }

  // Streams the assistant reply; onChunk fires per content fragment and the
  // final usage event is returned once the stream closes.
  async postMessage(
    sessionId: string,
    text: string,
    onChunk: (content: string) => void,
  ): Promise<UsageEvent> {
    const response = await this.request(`/api/sessions/${sessionId}/messages`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ text }),
    });
    let usage: UsageEvent | null = null;
    for await (const event of parseNdjson(readBody(response))) {
      if (event.type === "chunk") onChunk(String(event.content ?? ""));
      else if (event.type === "usage") usage = event as unknown as UsageEvent;
      else if (event.type === "error") {
        throw new ApiError(String(event.code ?? "upstream"), String(event.message ?? ""));
      }
    }
    if (!usage) throw new ApiError("upstream", "stream ended without a usage event");
    return usage;
  }

  async switchModel(sessionId: string, modelId: string): Promise<void> {
    await this.request(`/api/sessions/${sessionId}/model`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ model_id: modelId }),
    });
  }

  async uploadDocument(data: ArrayBuffer | Uint8Array, name: string): Promise<UploadResult> {
    const body = data instanceof Uint8Array
      ? data.slice().buffer as ArrayBuffer
      : data;
    const response = await this.request("/api/documents", {
      method: "POST",
      headers: { "content-type": "application/pdf", "x-source-name": name },
      body,
    });
    return response.json();
  }

  async exportPdf(sessionId: string, studentName: string, courseNumber: string): Promise<Blob> {
    const response = await this.request(`/api/sessions/${sessionId}/export`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ student_name: studentName, course_number: courseNumber }),
    });
    return response.blob();
  }
}

// The surface pages depend on; tests substitute a stub implementing this.
export type Api = Pick<
  ApiClient,
  | "listModels"
  | "createSession"
  | "getSession"
  | "postMessage"
  | "switchModel"
  | "uploadDocument"
  | "exportPdf"
>;
