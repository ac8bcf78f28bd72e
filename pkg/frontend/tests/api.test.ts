import { describe, expect, it } from "vitest";

import { parseNdjson } from "../src/api.js";

function toChunks(parts: string[]): AsyncIterable<Uint8Array> {
  const encoder = new TextEncoder();
  return (async function* generate() {
    for (const part of parts) yield encoder.encode(part);
  })();
}

async function collect(parts: string[]) {
  const events = [];
  for await (const event of parseNdjson(toChunks(parts))) events.push(event);
  return events;
}

describe("parseNdjson", () => {
  it("parses one event per line", async () => {
    const events = await collect(['{"type":"chunk","content":"a"}\n{"type":"usage"}\n']);
    expect(events).toEqual([{ type: "chunk", content: "a" }, { type: "usage" }]);
  });

  it("reassembles lines split across chunk boundaries", async () => {
    const events = await collect([
      '{"type":"chu',
      'nk","content":"hel',
      'lo"}\n{"type":"us',
      'age","input_tokens":3}\n',
    ]);
    expect(events).toEqual([
      { type: "chunk", content: "hello" },
      { type: "usage", input_tokens: 3 },
    ]);
  });

  it("parses a trailing event without a final newline", async () => {
    const events = await collect(['{"type":"usage"}']);
    expect(events).toEqual([{ type: "usage" }]);
  });

  it("skips blank lines", async () => {
    const events = await collect(['\n\n{"type":"usage"}\n\n']);
    expect(events).toEqual([{ type: "usage" }]);
  });
});
