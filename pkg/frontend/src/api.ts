/** HTTP/WebSocket client for the session service.
 *
 * The client only ever sends input frames during a trial; all simulation
 * state it renders comes back from the server.
 */

import type {
    ExitSurveyData,
    FeedbackPayload,
    InputFrame,
    SessionCreated,
    StateFrame,
    SurveyRatings,
} from "./types.js";

/** The slice of the WebSocket API used here; browser and `ws` both fit. */
export interface WsLike {
    send(data: string): void;
    close(): void;
    onopen: ((ev?: unknown) => void) | null;
    onmessage: ((ev: { data: unknown }) => void) | null;
    onerror: ((ev?: unknown) => void) | null;
    onclose: ((ev?: unknown) => void) | null;
}

export type WebSocketFactory = (url: string) => WsLike;

export class ApiError extends Error {
    constructor(
        readonly status: number,
        detail: string,
    ) {
        super(`server returned ${status}: ${detail}`);
    }
}

async function checked<T>(response: Response): Promise<T> {
    if (!response.ok) {
        let detail = response.statusText;
        try {
            const body = (await response.json()) as { detail?: string };
            if (body.detail) detail = body.detail;
        } catch {
            // non-JSON error body; keep the status text
        }
        throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
}

/** A live trial input stream. */
export class InputStream {
    private readonly pending: Array<{
        resolve: (frame: StateFrame) => void;
        reject: (err: Error) => void;
    }> = [];

    constructor(private readonly ws: WsLike) {
        ws.onmessage = (ev) => {
            const doc = JSON.parse(String(ev.data)) as StateFrame & { error?: string };
            const waiter = this.pending.shift();
            if (!waiter) return;
            if (doc.error !== undefined) {
                waiter.reject(new Error(doc.error));
            } else {
                waiter.resolve(doc);
            }
        };
        ws.onerror = () => this.rejectAll(new Error("input stream error"));
        ws.onclose = () => this.rejectAll(new Error("input stream closed"));
    }

    private rejectAll(err: Error): void {
        while (this.pending.length > 0) {
            this.pending.shift()!.reject(err);
        }
    }

    /** Send one input frame and await the authoritative state echo. */
    sendFrame(frame: InputFrame): Promise<StateFrame> {
        return new Promise((resolve, reject) => {
            this.pending.push({ resolve, reject });
            this.ws.send(JSON.stringify(frame));
        });
    }

    close(): void {
        this.ws.close();
    }
}

export class ApiClient {
    private readonly wsFactory: WebSocketFactory;

    constructor(
        readonly baseUrl: string,
        options: { wsFactory?: WebSocketFactory } = {},
    ) {
        this.wsFactory =
            options.wsFactory ??
            ((url: string) => new WebSocket(url) as unknown as WsLike);
    }

    private wsUrl(path: string): string {
        return this.baseUrl.replace(/^http/, "ws") + path;
    }

    createSession(): Promise<SessionCreated> {
        return fetch(`${this.baseUrl}/sessions`, { method: "POST" }).then((r) =>
            checked<SessionCreated>(r),
        );
    }

    async startTrial(sessionId: string): Promise<number> {
        const body = await fetch(`${this.baseUrl}/sessions/${sessionId}/trials`, {
            method: "POST",
        }).then((r) => checked<{ trial: number }>(r));
        return body.trial;
    }

    openInputStream(sessionId: string, trial: number): Promise<InputStream> {
        return new Promise((resolve, reject) => {
            const ws = this.wsFactory(this.wsUrl(`/sessions/${sessionId}/trials/${trial}/input`));
            ws.onopen = () => resolve(new InputStream(ws));
            ws.onerror = () => reject(new Error("could not open the input stream"));
        });
    }

    getFeedback(sessionId: string, trial: number): Promise<FeedbackPayload> {
        return fetch(`${this.baseUrl}/sessions/${sessionId}/trials/${trial}/feedback`).then((r) =>
            checked<FeedbackPayload>(r),
        );
    }

    submitSurvey(sessionId: string, trial: number, ratings: SurveyRatings): Promise<unknown> {
        return fetch(`${this.baseUrl}/sessions/${sessionId}/trials/${trial}/survey`, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(ratings),
        }).then((r) => checked(r));
    }

    submitExitSurvey(sessionId: string, data: ExitSurveyData): Promise<unknown> {
        return fetch(`${this.baseUrl}/sessions/${sessionId}/exit-survey`, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(data),
        }).then((r) => checked(r));
    }

    exportRows(): Promise<string> {
        return fetch(`${this.baseUrl}/export`).then(async (r) => {
            if (!r.ok) throw new ApiError(r.status, r.statusText);
            return r.text();
        });
    }
}
