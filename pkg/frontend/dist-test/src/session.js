// Designer session state. Holds the module toggle words, the last chain
// response, the optional actuation plan and its playback cursor. All numbers
// on screen mirror the last API response; the client owns no kinematics.
import { ApiError, } from "./api.js";
const FACET_COUNT = 3;
function flipBit(word, bit) {
    const chars = word.split("");
    chars[bit] = chars[bit] === "0" ? "1" : "0";
    return chars.join("");
}
export class DesignerSession {
    api;
    design;
    states;
    lastResponse = null;
    banner = null;
    plan = null;
    planCursor = 0;
    overlayPoints = null;
    actionLog = [];
    listeners = [];
    inflight = null;
    requestSerial = 0;
    constructor(api, design, moduleCount = 3) {
        this.api = api;
        this.design = design;
        this.states = Array.from({ length: moduleCount }, () => "000");
    }
    onChange(listener) {
        this.listeners.push(listener);
    }
    notify() {
        for (const listener of this.listeners)
            listener(this);
    }
    metrics() {
        return this.lastResponse ? this.lastResponse.metrics : null;
    }
    toConfigDocument() {
        return { design: { ...this.design }, states: [...this.states], metadata: {} };
    }
    /** Flip one facet of one module (module index is 1-based, bit 0..2). */
    async toggleFacet(moduleIndex, bit) {
        if (moduleIndex < 1 || moduleIndex > this.states.length) {
            throw new RangeError(`module ${moduleIndex} out of range`);
        }
        if (bit < 0 || bit >= FACET_COUNT) {
            throw new RangeError(`bit ${bit} out of range`);
        }
        this.states[moduleIndex - 1] = flipBit(this.states[moduleIndex - 1], bit);
        this.actionLog.push({ kind: "toggle", module: moduleIndex, bit });
        await this.refresh();
    }
    async setStates(states) {
        this.states = [...states];
        this.actionLog.push({ kind: "set-states", states: [...states] });
        await this.refresh();
    }
    async addModule(word = "000") {
        this.states.push(word);
        this.actionLog.push({ kind: "add-module", states: [word] });
        await this.refresh();
    }
    async removeModule() {
        if (this.states.length <= 1)
            return;
        this.states.pop();
        this.actionLog.push({ kind: "remove-module" });
        await this.refresh();
    }
    /**
     * Re-query the chain endpoint for the current states. Only the newest
     * request wins: anything still in flight is aborted and stale responses
     * are dropped.
     */
    async refresh() {
        this.inflight?.abort();
        const controller = new AbortController();
        this.inflight = controller;
        const serial = ++this.requestSerial;
        try {
            const response = await this.api.chain(this.design, this.states, controller.signal);
            if (serial !== this.requestSerial)
                return; // a newer request superseded us
            this.lastResponse = response;
            this.banner = null;
        }
        catch (err) {
            if (controller.signal.aborted)
                return;
            if (serial !== this.requestSerial)
                return;
            if (err instanceof ApiError && err.status === 422) {
                this.banner = `inadmissible design: ${err.message}`;
            }
            else {
                this.banner = err instanceof Error ? err.message : String(err);
            }
        }
        finally {
            if (this.inflight === controller)
                this.inflight = null;
        }
        this.notify();
    }
    /** Fetch the full single-flip schedule for the current module count. */
    async loadGrayPlan() {
        this.plan = await this.api.graycode(this.states.length);
        this.planCursor = 0;
        this.notify();
        return this.plan;
    }
    planStepCount() {
        return this.plan ? this.plan.sequence.length : 0;
    }
    /** Apply the plan word under the cursor, then advance. False when done. */
    async playStep() {
        if (!this.plan || this.planCursor >= this.plan.sequence.length)
            return false;
        const word = this.plan.sequence[this.planCursor];
        const states = [];
        for (let i = 0; i < word.length; i += 3)
            states.push(word.slice(i, i + 3));
        this.planCursor += 1;
        await this.setStates(states);
        return true;
    }
    /** Pull the reachable-endpoint cloud for m modules (UI cap applies). */
    async overlayWorkspace(m, cap = 4) {
        if (m < 1) {
            this.overlayPoints = null;
            this.notify();
            return null;
        }
        if (m > cap) {
            this.banner = `workspace overlay capped at ${cap} modules`;
            this.notify();
            return null;
        }
        try {
            const ws = await this.api.workspace(m, this.design);
            this.overlayPoints = ws.points;
            this.banner = null;
        }
        catch (err) {
            if (err instanceof ApiError && err.status === 413) {
                this.banner = `workspace too large: ${err.message}`;
                this.overlayPoints = null;
            }
            else {
                throw err;
            }
        }
        this.notify();
        return this.overlayPoints;
    }
}
