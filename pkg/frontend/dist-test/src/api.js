// Typed client for the boom kinematics JSON API (/v1). The designer never
// computes geometry itself; everything shown on screen comes back from here.
export class ApiError extends Error {
    status;
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function decode(resp) {
    const body = await resp.json().catch(() => ({ error: resp.statusText }));
    if (!resp.ok) {
        throw new ApiError(resp.status, body.error ?? resp.statusText);
    }
    return body;
}
export class ApiClient {
    baseUrl;
    constructor(baseUrl = "http://127.0.0.1:8787/v1") {
        this.baseUrl = baseUrl;
    }
    async defaults() {
        return decode(await fetch(`${this.baseUrl}/design`));
    }
    async chain(design, states, signal) {
        const resp = await fetch(`${this.baseUrl}/chain`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ design, states, metadata: {} }),
            signal,
        });
        return decode(resp);
    }
    async workspace(m, design) {
        const qs = new URLSearchParams({
            m: String(m),
            n: String(design.n),
            beta_degrees: String(design.beta_degrees),
            L: String(design.L),
        });
        return decode(await fetch(`${this.baseUrl}/workspace?${qs}`));
    }
    async graycode(m) {
        const resp = await fetch(`${this.baseUrl}/graycode`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ m }),
        });
        return decode(resp);
    }
}
