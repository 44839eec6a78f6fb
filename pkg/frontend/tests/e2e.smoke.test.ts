/**
 * End-to-end smoke test: spawns the real session service, then drives one
 * scripted safe landing through it over HTTP and WebSocket using the same
 * client modules the browser uses.
 */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { ApiClient, type WsLike } from "../src/api.js";
import { feedbackView } from "../src/feedbackView.js";
import { SurveyForm } from "../src/survey.js";
import type { InputFrame } from "../src/types.js";

const PORT = 8749;
const BASE_URL = `http://127.0.0.1:${PORT}`;

let workDir: string;
let server: ChildProcess | null = null;
let script: InputFrame[] = [];

async function waitForServer(timeoutMs: number): Promise<void> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
        try {
            const response = await fetch(`${BASE_URL}/healthz`);
            if (response.ok) return;
        } catch {
            // not up yet
        }
        if (Date.now() > deadline) {
            throw new Error("session service did not come up in time");
        }
        await new Promise((resolve) => setTimeout(resolve, 250));
    }
}

beforeAll(async () => {
    workDir = mkdtempSync(join(tmpdir(), "quadland-e2e-"));

    const scriptPath = join(workDir, "land.jsonl");
    const generated = spawnSync("quadland", ["script-gen", "--kind", "land", "--out", scriptPath], {
        encoding: "utf-8",
    });
    expect(generated.status, generated.stderr).toBe(0);
    script = readFileSync(scriptPath, "utf-8")
        .split("\n")
        .filter((line) => line.trim().length > 0)
        .map((line, index) => {
            const doc = JSON.parse(line) as { throttle: number; attitude: -1 | 0 | 1 };
            return { t: index * 0.02, throttle: doc.throttle, attitude: doc.attitude };
        });
    expect(script.length).toBeGreaterThan(100);

    server = spawn("quadland", ["serve", "--port", String(PORT), "--data-dir", join(workDir, "data")], {
        stdio: "ignore",
    });
    await waitForServer(30_000);
}, 60_000);

afterAll(() => {
    server?.kill();
    rmSync(workDir, { recursive: true, force: true });
});

describe("scripted landing through the live service", () => {
    it("completes the trial-feedback-survey loop", async () => {
        const client = new ApiClient(BASE_URL, {
            wsFactory: (url) => new WebSocket(url) as unknown as WsLike,
        });

        const session = await client.createSession();
        expect(session.condition).toBe("Baseline"); // first round-robin slot

        const trial = await client.startTrial(session.id);
        expect(trial).toBe(1);

        const stream = await client.openInputStream(session.id, trial);
        let outcome: string | null = null;
        let finalT = 0;
        for (const frame of script) {
            const state = await stream.sendFrame(frame);
            expect(state.trial).toBe(trial);
            if (state.terminated) {
                outcome = state.outcome;
                finalT = state.t;
                break;
            }
        }
        expect(outcome).toBe("Safe");
        expect(finalT).toBeGreaterThan(10);
        expect(finalT).toBeLessThan(120);

        const payload = await client.getFeedback(session.id, trial);
        const model = feedbackView(payload, session.condition);
        expect(model.kind).toBe("table");
        if (model.kind === "table") {
            expect(model.rows[0]).toEqual(["Outcome", "Safe"]);
        }

        const form = new SurveyForm();
        form.setRating("motivation", 4);
        form.setRating("manageable", 3);
        form.setRating("actionable", 4);
        form.setRating("timely", 3);
        form.setRating("reflection", 5);
        await client.submitSurvey(session.id, trial, form.toSubmission());

        const rows = await client.exportRows();
        const parsed = rows
            .split("\n")
            .filter((line) => line.trim().length > 0)
            .map((line) => JSON.parse(line) as { outcome: string; motivation: number });
        expect(parsed).toHaveLength(1);
        expect(parsed[0]!.outcome).toBe("Safe");
        expect(parsed[0]!.motivation).toBe(4);
    }, 120_000);
});
