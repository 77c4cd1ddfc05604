// End-to-end: spawn the real session service, type through the wire
// protocol with a scripted pointer path, and replay every server message
// through the view model to check what a user would see.

import { spawn } from "node:child_process";
import type { ChildProcess } from "node:child_process";
import WebSocket from "ws";
import { afterAll, beforeAll, describe, expect, test } from "vitest";
import { parseServerMessage } from "../../src/protocol.js";
import type { CommitMsg, LayoutMsg, ServerMsg } from "../../src/protocol.js";
import { ViewModel } from "../../src/view.js";

const STEP = 1000 / 60; // synthetic pointer clock, 60 Hz spacing
const PARK: [number, number] = [0.7, -0.72]; // inside the square, on no key

let server: ChildProcess;
let serverLog = "";
let ws: WebSocket;
const received: ServerMsg[] = [];
let tMs = 0;

function sendJson(obj: unknown): void {
  ws.send(JSON.stringify(obj));
}

function sendPointer(x: number, y: number): void {
  tMs += STEP;
  sendJson({ type: "pointer", t_ms: tMs, x, y });
}

function holdAt(center: [number, number], holdMs: number): void {
  const frames = Math.ceil(holdMs / STEP) + 4;
  for (let i = 0; i < frames; i++) sendPointer(center[0], center[1]);
}

function park(): void {
  for (let i = 0; i < 4; i++) sendPointer(PARK[0], PARK[1]);
}

async function waitFor<T>(pick: () => T | undefined, what: string, timeoutMs = 15000): Promise<T> {
  const start = Date.now();
  for (;;) {
    const got = pick();
    if (got !== undefined) return got;
    if (Date.now() - start > timeoutMs) {
      throw new Error(`timed out waiting for ${what}\nserver log:\n${serverLog}`);
    }
    await new Promise((r) => setTimeout(r, 10));
  }
}

const commits = () => received.filter((m): m is CommitMsg => m.type === "commit");
const layouts = () => received.filter((m): m is LayoutMsg => m.type === "layout");
const latestLayout = () => layouts()[layouts().length - 1];

function keyCenter(layout: LayoutMsg, letter: string): [number, number] {
  const key = layout.keys.find((k) => k.letter === letter);
  if (!key) throw new Error(`no key ${letter} in layout with prefix "${layout.prefix}"`);
  return key.center;
}

beforeAll(async () => {
  const port = 17000 + Math.floor(Math.random() * 2000);
  server = spawn("slicetype", ["serve", "--port", String(port)], {
    stdio: ["ignore", "pipe", "pipe"],
  });
  server.stdout?.on("data", (d) => (serverLog += d.toString()));
  server.stderr?.on("data", (d) => (serverLog += d.toString()));

  // the service needs a moment to bind; retry until it answers
  for (let attempt = 0; ; attempt++) {
    try {
      await new Promise<void>((resolve, reject) => {
        const probe = new WebSocket(`ws://127.0.0.1:${port}/ws`);
        probe.once("open", () => {
          ws = probe;
          resolve();
        });
        probe.once("error", reject);
      });
      break;
    } catch (err) {
      if (attempt >= 50) throw err;
      await new Promise((r) => setTimeout(r, 200));
    }
  }

  ws.on("message", (data) => {
    for (const line of data.toString().split("\n")) {
      if (line.trim() === "") continue;
      const msg = parseServerMessage(line);
      if (msg !== null) received.push(msg);
    }
  });
}, 30000);

afterAll(() => {
  ws?.close();
  server?.kill();
});

describe("typing against the live service", () => {
  test("a scripted pointer path types 'in' and double-dwells p into 'input '", async () => {
    const hello = await waitFor(
      () => layouts().find((l) => l.prefix === ""),
      "hello layout",
    );
    expect(hello.keys).toHaveLength(26);
    expect(hello.corners.map((c) => c.id).sort()).toEqual(["delete", "mode", "space", "status"]);

    // shorten the dwell; the session is idle, so it applies at once
    sendJson({ type: "config", dwell_ms: 300 });

    // i, then n, re-aiming from the freshest layout each time
    holdAt(keyCenter(hello, "i"), 300);
    await waitFor(
      () => (commits().length >= 1 ? true : undefined),
      "commit of i",
    );
    expect(commits()[0]).toEqual({ type: "commit", kind: "char", text: "i" });
    park();
    const afterI = await waitFor(
      () => layouts().find((l) => l.prefix === "i"),
      "layout for prefix i",
    );

    holdAt(keyCenter(afterI, "n"), 300);
    await waitFor(
      () => (commits().length >= 2 ? true : undefined),
      "commit of n",
    );
    expect(commits()[1]).toEqual({ type: "commit", kind: "char", text: "n" });
    park();

    // the merged board after "in": keys with no completion are gone
    const afterIn = await waitFor(
      () => layouts().find((l) => l.prefix === "in"),
      "layout for prefix in",
    );
    const letters = afterIn.keys.map((k) => k.letter);
    expect(letters.length).toBeLessThan(26);
    expect(letters).not.toContain("z");
    expect(letters).toContain("p");

    // double dwell on p: first period commits the letter, holding on
    // through a second period commits the proposed word
    holdAt(keyCenter(afterIn, "p"), 600);
    await waitFor(
      () => (commits().length >= 4 ? true : undefined),
      "char p and word input",
    );
    expect(commits()[2]).toEqual({ type: "commit", kind: "char", text: "p" });
    expect(commits()[3]).toEqual({ type: "commit", kind: "word", text: "input" });
    park();

    const finalBuffer = await waitFor(
      () =>
        received.find((m) => m.type === "buffer" && m.text === "input ") as
          | ServerMsg
          | undefined,
      "buffer 'input '",
    );
    expect(finalBuffer).toBeDefined();

    // the proposed completion rides the dwell messages on p, both phases
    const pDwells = received.filter((m) => m.type === "dwell" && m.letter === "p");
    expect(pDwells.some((m) => m.type === "dwell" && m.phase === "first" && m.word === "input")).toBe(true);
    expect(pDwells.some((m) => m.type === "dwell" && m.phase === "second" && m.word === "input")).toBe(true);
  }, 60000);

  test("replaying every server message leaves the view showing 'input '", () => {
    // what the canvas would display is a pure function of the stream
    const view = new ViewModel();
    received.forEach((msg, i) => view.apply(msg, i * STEP));
    expect(view.buffer).toBe("input ");
    expect(view.dwell).toBeNull(); // final commit cleared the dwell
    expect(view.lastError).toBeNull();
    const final = view.layout!;
    expect(final.prefix).toBe(""); // word commit closed the word
    expect(final.keys).toHaveLength(26);
  });
});
