// Editable sidebar copy, one entry per module. Kept out of the components
// so instructors can reword benefits/limitations without touching logic.

export interface ModuleInfo {
  title: string;
  description: string;
  benefits: string[];
  limitations: string[];
}

export const MODULE_INFO: Record<string, ModuleInfo> = {
  coding: {
    title: "Coding Companion",
    description:
      "An upbeat tutor for coding questions, with examples in both R and Python.",
    benefits: [
      "Explanations tailored to what you already know",
      "Idiomatic R (tidyverse style) and Python (pandas) side by side",
      "Switch models any time to compare answers",
    ],
    limitations: [
      "Answers can be wrong or out of date; verify before submitting",
      "It does not know your course unless you tell it",
    ],
  },
  project: {
    title: "Project Coach",
    description:
      "Five coaching roles for team projects: scoping, premortem, team structuring, devil's advocate, and reflection.",
    benefits: [
      "Structured, step-by-step guidance for each project stage",
      "A complete scoping document by the end of the scoping session",
    ],
    limitations: [
      "The coach only knows what your team types in",
      "Advice is generic where your project details are thin",
    ],
  },
  exam: {
    title: "Exam Ally",
    description:
      "Practice questions generated from your uploaded course PDF, one at a time, with feedback and a score.",
    benefits: [
      "Questions grounded in your own course materials",
      "Four question styles to match the real exam",
    ],
    limitations: [
      "Needs a readable PDF; scanned images will not work",
      "Use it as the final stage of studying, not the first",
    ],
  },
  interview: {
    title: "Interview Mentor",
    description:
      "A six-question mock interview tailored to your resume and a job description, with spoken answers supported.",
    benefits: [
      "Questions tied to the actual job posting",
      "Practice answering out loud with voice input",
      "Honest, structured feedback with a score",
    ],
    limitations: [
      "Feedback reflects only what you said, not how you present in person",
      "Voice capture needs a browser with speech recognition",
    ],
  },
};

export const MODULE_KINDS = Object.keys(MODULE_INFO);
