/** Page flow: 20 iterations of trial -> feedback -> survey, then the exit survey. */

import { ApiClient } from "./api.js";
import { feedbackView } from "./feedbackView.js";
import { GameView } from "./game.js";
import { controlFrame, initialKeyState, mapKeyEvent, ThrottleController } from "./input.js";
import { ExitSurveyForm, SurveyForm, TRIAL_SURVEY_ITEMS } from "./survey.js";
import type { Condition, StateFrame } from "./types.js";

const TRIALS_PER_SESSION = 20;
const TICK_MS = 20; // 50 Hz input frames

declare global {
    interface Window {
        QUADLAND_BASE_URL?: string;
    }
}

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (node === null) throw new Error(`missing element #${id}`);
    return node as T;
}

function show(id: string, visible: boolean): void {
    el(id).style.display = visible ? "" : "none";
}

async function runTrial(client: ApiClient, sessionId: string, view: GameView): Promise<number> {
    const trial = await client.startTrial(sessionId);
    el("status").textContent = `Trial ${trial} of ${TRIALS_PER_SESSION}: land on the pad`;

    let keys = initialKeyState();
    const throttle = new ThrottleController();
    const onKeyDown = (ev: KeyboardEvent) => {
        keys = mapKeyEvent(ev.key, true, keys);
    };
    const onKeyUp = (ev: KeyboardEvent) => {
        keys = mapKeyEvent(ev.key, false, keys);
    };
    document.addEventListener("keydown", onKeyDown);
    document.addEventListener("keyup", onKeyUp);

    const stream = await client.openInputStream(sessionId, trial);
    let prev: StateFrame | null = null;
    let latest: StateFrame | null = null;
    let lastFrameAt = performance.now();

    const renderLoop = () => {
        if (latest !== null) {
            const alpha = (performance.now() - lastFrameAt) / TICK_MS;
            view.render(prev, latest, alpha);
        }
        if (latest === null || !latest.terminated) {
            requestAnimationFrame(renderLoop);
        }
    };
    requestAnimationFrame(renderLoop);

    try {
        let t = 0;
        for (;;) {
            const frame = controlFrame(t, throttle.tick(keys, TICK_MS / 1000), keys);
            const state = await stream.sendFrame(frame);
            prev = latest;
            latest = state;
            lastFrameAt = performance.now();
            if (state.terminated) {
                el("status").textContent = `Trial ${trial}: ${state.outcome}`;
                return trial;
            }
            t += TICK_MS / 1000;
            await new Promise((resolve) => setTimeout(resolve, TICK_MS));
        }
    } finally {
        document.removeEventListener("keydown", onKeyDown);
        document.removeEventListener("keyup", onKeyUp);
        stream.close();
    }
}

async function showFeedback(client: ApiClient, sessionId: string, trial: number, condition: Condition): Promise<void> {
    el("status").textContent = "Preparing your feedback...";
    const payload = await client.getFeedback(sessionId, trial);
    const model = feedbackView(payload, condition);
    const container = el<HTMLDivElement>("feedback");
    container.innerHTML = "";

    if (model.kind === "table") {
        const table = document.createElement("table");
        for (const [label, value] of model.rows) {
            const row = table.insertRow();
            row.insertCell().textContent = label;
            row.insertCell().textContent = value;
        }
        container.appendChild(table);
    } else {
        if (model.kind === "image+paragraph") {
            const imageBox = document.createElement("div");
            imageBox.className = "feedback-image";
            imageBox.innerHTML = model.imageSvg;
            container.appendChild(imageBox);
        }
        const paragraph = document.createElement("p");
        paragraph.textContent = model.kind === "paragraph" ? model.text : model.text;
        container.appendChild(paragraph);
    }
    el("status").textContent = "Review your feedback, then rate it below.";
}

function buildSurveyForm(container: HTMLDivElement, form: SurveyForm, submit: HTMLButtonElement): void {
    container.innerHTML = "";
    submit.disabled = true;
    for (const item of TRIAL_SURVEY_ITEMS) {
        const block = document.createElement("div");
        block.className = "survey-item";
        const prompt = document.createElement("p");
        prompt.textContent = `${item.prompt} (1 = ${item.lowLabel}, 5 = ${item.highLabel})`;
        block.appendChild(prompt);
        for (let value = 1; value <= 5; value += 1) {
            const label = document.createElement("label");
            const radio = document.createElement("input");
            radio.type = "radio";
            radio.name = item.key;
            radio.value = String(value);
            radio.addEventListener("change", () => {
                form.setRating(item.key, value);
                submit.disabled = !form.isComplete();
            });
            label.appendChild(radio);
            label.append(String(value));
            block.appendChild(label);
        }
        container.appendChild(block);
    }
}

async function collectSurvey(client: ApiClient, sessionId: string, trial: number): Promise<void> {
    const form = new SurveyForm();
    const submit = el<HTMLButtonElement>("survey-submit");
    buildSurveyForm(el<HTMLDivElement>("survey-items"), form, submit);
    show("survey", true);
    await new Promise<void>((resolve) => {
        submit.onclick = async () => {
            if (!form.isComplete()) return; // gated: no partial submissions
            submit.disabled = true;
            await client.submitSurvey(sessionId, trial, form.toSubmission());
            resolve();
        };
    });
    show("survey", false);
}

async function collectExitSurvey(client: ApiClient, sessionId: string): Promise<void> {
    show("exit-survey", true);
    const form = new ExitSurveyForm();
    const submit = el<HTMLButtonElement>("exit-submit");
    const refresh = () => {
        form.genderIdentity = el<HTMLInputElement>("exit-gender").value.trim();
        const age = Number(el<HTMLInputElement>("exit-age").value);
        form.age = Number.isInteger(age) && age >= 18 ? age : null;
        form.droneExperience = el<HTMLSelectElement>("exit-drone").value;
        form.videoGameFrequency = el<HTMLSelectElement>("exit-games").value;
        const helpfulness = Number(el<HTMLSelectElement>("exit-helpfulness").value);
        if (helpfulness >= 1 && helpfulness <= 5) form.setHelpfulness(helpfulness);
        form.strategy = el<HTMLTextAreaElement>("exit-strategy").value;
        submit.disabled = !form.isComplete();
    };
    for (const id of ["exit-gender", "exit-age", "exit-drone", "exit-games", "exit-helpfulness", "exit-strategy"]) {
        el(id).addEventListener("input", refresh);
        el(id).addEventListener("change", refresh);
    }
    await new Promise<void>((resolve) => {
        submit.onclick = async () => {
            refresh();
            if (!form.isComplete()) return;
            submit.disabled = true;
            await client.submitExitSurvey(sessionId, form.toSubmission());
            resolve();
        };
    });
    show("exit-survey", false);
    el("status").textContent = "All done. Thank you for participating!";
}

export async function runExperiment(): Promise<void> {
    const baseUrl = window.QUADLAND_BASE_URL ?? window.location.origin;
    const client = new ApiClient(baseUrl);
    const view = new GameView(el<HTMLCanvasElement>("game"));

    const session = await client.createSession();
    el("status").textContent = `Session ${session.id} (${session.condition} feedback)`;

    for (let i = 0; i < TRIALS_PER_SESSION; i += 1) {
        show("feedback", false);
        const trial = await runTrial(client, session.id, view);
        show("feedback", true);
        await showFeedback(client, session.id, trial, session.condition);
        await collectSurvey(client, session.id, trial);
    }
    await collectExitSurvey(client, session.id);
}

if (typeof document !== "undefined" && document.getElementById("game") !== null) {
    runExperiment().catch((err) => {
        el("status").textContent = `Something went wrong: ${err}`;
    });
}
