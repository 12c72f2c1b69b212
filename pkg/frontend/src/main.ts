// DOM wiring: module toggle switches, metrics readout, plan playback and
// workspace overlay controls around a BoomViewer.

import { ApiClient } from "./api.js";
import { DesignerSession } from "./session.js";
import { BoomViewer } from "./viewer.js";

const apiBase =
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8787/v1";
const api = new ApiClient(apiBase);

const canvas = document.getElementById("view") as HTMLCanvasElement;
const modulesDiv = document.getElementById("modules") as HTMLDivElement;
const metricsDiv = document.getElementById("metrics") as HTMLDivElement;
const bannerDiv = document.getElementById("banner") as HTMLDivElement;
const stepCounter = document.getElementById("step-counter") as HTMLSpanElement;

const viewer = new BoomViewer(canvas);
let playTimer: number | null = null;

async function init() {
  const defaults = await api.defaults();
  const session = new DesignerSession(api, {
    n: defaults.n,
    beta_degrees: defaults.beta_degrees,
    L: defaults.L,
  });

  session.onChange(() => {
    renderModules(session);
    renderMetrics(session);
    if (session.lastResponse) viewer.showChain(session.lastResponse);
    viewer.showWorkspace(session.overlayPoints);
    stepCounter.textContent = session.plan
      ? `step ${session.planCursor}/${session.planStepCount()}`
      : "";
  });

  document.getElementById("add-module")!.addEventListener("click", () => {
    void session.addModule();
  });
  document.getElementById("remove-module")!.addEventListener("click", () => {
    void session.removeModule();
  });
  document.getElementById("all-on")!.addEventListener("click", () => {
    void session.setStates(session.states.map(() => "111"));
  });
  document.getElementById("all-off")!.addEventListener("click", () => {
    void session.setStates(session.states.map(() => "000"));
  });
  document.getElementById("load-plan")!.addEventListener("click", () => {
    void session.loadGrayPlan();
  });
  document.getElementById("play-step")!.addEventListener("click", () => {
    void session.playStep();
  });
  document.getElementById("play-all")!.addEventListener("click", () => {
    if (playTimer !== null) {
      clearInterval(playTimer);
      playTimer = null;
      return;
    }
    playTimer = window.setInterval(async () => {
      const more = await session.playStep();
      if (!more && playTimer !== null) {
        clearInterval(playTimer);
        playTimer = null;
      }
    }, 450);
  });
  const overlayInput = document.getElementById("overlay-m") as HTMLInputElement;
  document.getElementById("overlay")!.addEventListener("click", () => {
    void session.overlayWorkspace(Number(overlayInput.value));
  });
  document.getElementById("overlay-clear")!.addEventListener("click", () => {
    void session.overlayWorkspace(0);
  });

  function renderModules(s: DesignerSession) {
    modulesDiv.innerHTML = "";
    s.states.forEach((word, idx) => {
      const row = document.createElement("div");
      row.className = "module-row";
      const label = document.createElement("span");
      label.textContent = `module ${idx + 1}  [${word}]`;
      row.appendChild(label);
      for (let bit = 0; bit < 3; bit++) {
        const toggle = document.createElement("input");
        toggle.type = "checkbox";
        toggle.checked = word[bit] === "1";
        toggle.title = `facet ${bit}`;
        toggle.addEventListener("change", () => {
          void s.toggleFacet(idx + 1, bit);
        });
        row.appendChild(toggle);
      }
      modulesDiv.appendChild(row);
    });
  }

  function renderMetrics(s: DesignerSession) {
    bannerDiv.textContent = s.banner ?? "";
    bannerDiv.style.display = s.banner ? "block" : "none";
    const m = s.metrics();
    metricsDiv.textContent = m
      ? `length ${m.length.toFixed(4)}   curvature ${m.curvature.toFixed(4)}   ` +
        `${m.planar ? "planar" : "non-planar"}`
      : "no data";
  }

  await session.refresh();
}

void init();
