import { beforeEach, describe, expect, it } from "vitest";

import {
  createVoiceControl,
  isSpeechSupported,
  type SpeechRecognitionLike,
} from "../src/components/voice.js";

type WindowWithSpeech = Window & {
  SpeechRecognition?: new () => SpeechRecognitionLike;
  webkitSpeechRecognition?: new () => SpeechRecognitionLike;
};

let fake: FakeRecognition | null = null;

class FakeRecognition implements SpeechRecognitionLike {
  lang = "";
  continuous = false;
  interimResults = false;
  onresult: ((event: { results: ArrayLike<ArrayLike<{ transcript: string }>> }) => void) | null = null;
  onerror: ((event: { error: string }) => void) | null = null;
  onend: (() => void) | null = null;

  constructor() {
    fake = this;
  }

  start(): void {}
  stop(): void {}
}

beforeEach(() => {
  document.body.innerHTML = "";
  fake = null;
  delete (window as WindowWithSpeech).SpeechRecognition;
  delete (window as WindowWithSpeech).webkitSpeechRecognition;
});

describe("voice capture", () => {
  it("detects browser support", () => {
    expect(isSpeechSupported()).toBe(false);
    (window as WindowWithSpeech).SpeechRecognition = FakeRecognition;
    expect(isSpeechSupported()).toBe(true);
  });

  it("recognized text lands in the callback without auto-submit", () => {
    (window as WindowWithSpeech).SpeechRecognition = FakeRecognition;
    const received: string[] = [];
    const control = createVoiceControl((text) => received.push(text));
    document.body.appendChild(control);

    control.querySelector("button")!.click();
    fake!.onresult!({ results: [[{ transcript: "my spoken answer" }]] });
    fake!.onend!();

    expect(received).toEqual(["my spoken answer"]);
    expect(control.querySelector("button")!.disabled).toBe(false);
  });

  it("permission denial shows the typing fallback notice", () => {
    (window as WindowWithSpeech).SpeechRecognition = FakeRecognition;
    const control = createVoiceControl(() => {});
    document.body.appendChild(control);

    control.querySelector("button")!.click();
    fake!.onerror!({ error: "not-allowed" });

    const notice = control.querySelector<HTMLElement>(".voice-notice")!;
    expect(notice.hidden).toBe(false);
    expect(notice.textContent).toContain("type your answer");
  });

  it("renders a disabled control with a notice when unsupported", () => {
    const control = createVoiceControl(() => {});
    expect(control.querySelector("button")!.disabled).toBe(true);
    expect(control.querySelector<HTMLElement>(".voice-notice")!.hidden).toBe(false);
  });
});
