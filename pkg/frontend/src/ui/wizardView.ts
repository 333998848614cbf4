/**
 * Submission wizard rendering: an animated step header plus one form per
 * step; server errors appear inline at the step that owns the field.
 */

import type { SubmissionWizard, WizardState, WizardStep } from "../wizard.js";
import { WIZARD_STEPS } from "../wizard.js";

function field(labelText: string, name: string, type = "text"): HTMLLabelElement {
  const label = document.createElement("label");
  label.textContent = labelText;
  const input = document.createElement("input");
  input.name = name;
  input.type = type;
  label.appendChild(input);
  return label;
}

function value(form: HTMLFormElement, name: string): string {
  return (form.elements.namedItem(name) as HTMLInputElement | null)?.value ?? "";
}

function stepHeader(current: WizardStep): HTMLElement {
  const header = document.createElement("ol");
  header.className = "wizard-steps";
  for (const step of WIZARD_STEPS) {
    const item = document.createElement("li");
    item.textContent = step;
    if (step === current) item.className = "active";
    header.appendChild(item);
  }
  return header;
}

function inlineError(state: WizardState): HTMLElement | null {
  const error = state.errors[state.step];
  if (!error) return null;
  const p = document.createElement("p");
  p.className = "step-error";
  p.textContent = `${error.code}: ${error.message}`;
  return p;
}

function buildForm(wizard: SubmissionWizard, state: WizardState): HTMLElement {
  const form = document.createElement("form");
  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Continue";

  switch (state.step) {
    case "REGISTER": {
      form.append(
        field("First name", "first_name"),
        field("Last name", "last_name"),
        field("E-mail", "email", "email"),
        field("Password (10+ characters)", "password", "password"),
      );
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        void wizard
          .submitRegister(
            value(form, "first_name"),
            value(form, "last_name"),
            value(form, "email"),
            value(form, "password"),
          )
          .catch(() => undefined);
      });
      break;
    }
    case "PROFILE": {
      form.append(
        field("Birth date", "birth_date", "date"),
        field("Country of residence (alpha-2)", "country"),
      );
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        void wizard
          .submitProfile(value(form, "birth_date"), value(form, "country"))
          .catch(() => undefined);
      });
      break;
    }
    case "DESCRIBE": {
      form.append(field("Project title", "title"), field("Description", "description"));
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        wizard.submitDescribe(value(form, "title"), value(form, "description"));
      });
      break;
    }
    case "TOPIC": {
      const select = document.createElement("select");
      select.name = "topic_id";
      for (const topic of wizard.topics) {
        const option = document.createElement("option");
        option.value = topic.id;
        option.textContent = `${topic.id} — ${topic.title}`;
        select.appendChild(option);
      }
      form.appendChild(select);
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        wizard.submitTopic(select.value);
      });
      break;
    }
    case "FORMAT": {
      const select = document.createElement("select");
      select.name = "media_type_id";
      for (const media of wizard.meta?.media_types ?? []) {
        const option = document.createElement("option");
        option.value = media.id;
        option.textContent = media.display_name;
        select.appendChild(option);
      }
      form.appendChild(select);
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        wizard.submitFormat(select.value);
      });
      break;
    }
    case "LINK": {
      form.appendChild(field("Link to your media", "media_url", "url"));
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        void wizard.submitLink(value(form, "media_url")).catch(() => undefined);
      });
      break;
    }
    case "REVIEW": {
      const review = document.createElement("pre");
      review.className = "review-payload";
      review.textContent = JSON.stringify(state.review, null, 2);
      form.appendChild(review);
      const attest = document.createElement("p");
      attest.textContent = `Includes the contest hashtag ${
        wizard.meta?.required_hashtag ?? ""
      } on the platform post.`;
      form.appendChild(attest);
      submit.textContent = "Submit entry";
      form.addEventListener("submit", (e) => {
        e.preventDefault();
        void wizard.confirm().catch(() => undefined);
      });
      break;
    }
    case "DONE": {
      const done = document.createElement("p");
      done.className = "done";
      done.textContent = `Submitted! Your entry competes in ${state.result?.category_id}.`;
      form.appendChild(done);
      submit.hidden = true;
      break;
    }
  }
  form.appendChild(submit);
  return form;
}

export function renderWizard(wizard: SubmissionWizard, root: HTMLElement): void {
  const draw = (state: WizardState) => {
    root.replaceChildren();
    root.appendChild(stepHeader(state.step));
    const error = inlineError(state);
    if (error) root.appendChild(error);
    root.appendChild(buildForm(wizard, state));
  };
  wizard.subscribe(draw);
  draw(wizard.state());
}
