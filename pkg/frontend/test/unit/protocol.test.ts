import { describe, expect, test } from "vitest";
import {
  parseServerMessage,
  serializeClientMessage,
} from "../../src/protocol.js";
import type { ClientMsg } from "../../src/protocol.js";

describe("parseServerMessage", () => {
  test("accepts each server message type", () => {
    const frames = [
      {
        type: "layout",
        mode: "merging",
        prefix: "",
        radii: [0.3, 0.65, 1.0],
        keys: [],
        corners: [],
      },
      { type: "dwell", letter: "t", phase: "first", fraction: 0.5, word: null },
      { type: "commit", kind: "char", text: "t" },
      { type: "buffer", text: "the " },
      { type: "error", code: "bad_json", detail: "frame is not valid JSON" },
    ];
    for (const frame of frames) {
      const parsed = parseServerMessage(JSON.stringify(frame));
      expect(parsed).not.toBeNull();
      expect(parsed!.type).toBe(frame.type);
    }
  });

  test("tolerates the trailing newline the server appends", () => {
    const parsed = parseServerMessage('{"type":"buffer","text":"hi"}\n');
    expect(parsed).toEqual({ type: "buffer", text: "hi" });
  });

  test("drops malformed frames instead of throwing", () => {
    const garbage = [
      "not json at all",
      "{truncated",
      "[1,2,3]",
      "42",
      '"just a string"',
      "null",
      '{"type":"teleport"}',
      '{"letter":"t"}',
    ];
    for (const raw of garbage) {
      expect(parseServerMessage(raw)).toBeNull();
    }
  });
});

describe("serializeClientMessage", () => {
  test("round-trips through JSON", () => {
    const msgs: ClientMsg[] = [
      { type: "pointer", t_ms: 16.7, x: 0.25, y: -0.5 },
      { type: "config", dwell_ms: 300 },
      { type: "config", mode: "non_merging", corpus_id: "bundled" },
      { type: "reset" },
    ];
    for (const msg of msgs) {
      expect(JSON.parse(serializeClientMessage(msg))).toEqual(msg);
    }
  });
});
