// Browser entry point: wires the socket, the pointer pump, and the render
// loop to the DOM.  Everything stateful lives in the imported modules; this
// file only plumbs events between them.

import { SessionClient } from "./client.js";
import { PointerFeed } from "./pointer.js";
import { ViewModel, render } from "./view.js";
import { toKeyboard } from "./geometry.js";

function mustGet<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`page skeleton is missing #${id}`);
  return el as T;
}

const canvas = mustGet<HTMLCanvasElement>("board");
const statusEl = mustGet<HTMLSpanElement>("status");
const dwellInput = mustGet<HTMLInputElement>("dwell");
const dwellLabel = mustGet<HTMLSpanElement>("dwell-label");
const maybeCtx = canvas.getContext("2d");
if (maybeCtx === null) throw new Error("2d canvas unavailable");
const ctx = maybeCtx;

const view = new ViewModel();
const client = new SessionClient(new WebSocket(`ws://${location.host}/ws`));
const feed = new PointerFeed((msg) => void client.send(msg));

client.onStateChange = (state) => {
  statusEl.textContent = state === "open" ? "connected" : state;
};
statusEl.textContent = "connecting";

// -- canvas sizing ------------------------------------------------------------

// The keyboard is a square; the canvas stays square no matter the window.
let cssSize = 0;

function resize(): void {
  const controls = document.getElementById("controls");
  const spare = controls ? controls.getBoundingClientRect().height + 16 : 16;
  cssSize = Math.max(200, Math.floor(Math.min(window.innerWidth, window.innerHeight - spare)));
  const dpr = window.devicePixelRatio || 1;
  canvas.style.width = `${cssSize}px`;
  canvas.style.height = `${cssSize}px`;
  canvas.width = Math.round(cssSize * dpr);
  canvas.height = Math.round(cssSize * dpr);
  ctx.setTransform(dpr, 0, 0, dpr, 0, 0);
}

window.addEventListener("resize", resize);
resize();

// -- input --------------------------------------------------------------------

canvas.addEventListener("pointermove", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const p = toKeyboard(ev.clientX - rect.left, ev.clientY - rect.top, rect.width);
  feed.move(p.x, p.y);
});
canvas.addEventListener("pointerleave", () => feed.leave());

dwellInput.addEventListener("change", () => {
  const ms = Number(dwellInput.value);
  dwellLabel.textContent = `${ms} ms`;
  client.send({ type: "config", dwell_ms: ms });
});
dwellLabel.textContent = `${dwellInput.value} ms`;

feed.start();

// -- render loop --------------------------------------------------------------

function frame(nowMs: number): void {
  for (const msg of client.drain()) {
    view.apply(msg, nowMs);
    if (msg.type === "error") {
      statusEl.textContent = `error: ${msg.code}`;
    }
  }
  render(view, ctx, cssSize, nowMs);
  requestAnimationFrame(frame);
}

requestAnimationFrame(frame);
