// Voice capture for the Interview Mentor page. Recognition runs entirely in
// the browser; the server only ever receives text. Recognized speech lands
// in the input bar for editing and is never auto-submitted.

declare global {
  interface Window {
    SpeechRecognition?: new () => SpeechRecognitionLike;
    webkitSpeechRecognition?: new () => SpeechRecognitionLike;
  }
}

export interface SpeechRecognitionLike {
  lang: string;
  continuous: boolean;
  interimResults: boolean;
  onresult: ((event: { results: ArrayLike<ArrayLike<{ transcript: string }>> }) => void) | null;
  onerror: ((event: { error: string }) => void) | null;
  onend: (() => void) | null;
  start(): void;
  stop(): void;
}

export function isSpeechSupported(): boolean {
  return Boolean(window.SpeechRecognition || window.webkitSpeechRecognition);
}

export function createVoiceControl(onText: (text: string) => void): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "voice-control";

  const button = document.createElement("button");
  button.type = "button";
  button.className = "voice-button";
  button.textContent = "Speak your answer";
  const notice = document.createElement("span");
  notice.className = "voice-notice";
  notice.hidden = true;
  wrap.append(button, notice);

  if (!isSpeechSupported()) {
    button.disabled = true;
    notice.textContent = "Voice input is not available in this browser; type instead.";
    notice.hidden = false;
    return wrap;
  }

  const Recognition = (window.SpeechRecognition || window.webkitSpeechRecognition)!;
  button.addEventListener("click", () => {
    const recognition = new Recognition();
    recognition.lang = "en-US";
    recognition.continuous = false;
    recognition.interimResults = false;
    button.disabled = true;
    recognition.onresult = (event) => {
      const transcript = Array.from(
        { length: event.results.length },
        (_, i) => event.results[i][0].transcript,
      ).join(" ");
      onText(transcript); // editable before send; never auto-submitted
    };
    recognition.onerror = (event) => {
      notice.textContent = event.error === "not-allowed"
        ? "Microphone permission denied; type your answer instead."
        : `Voice capture failed (${event.error}); type your answer instead.`;
      notice.hidden = false;
    };
    recognition.onend = () => {
      button.disabled = false;
    };
    recognition.start();
  });

  return wrap;
}
