import { spawnSync } from "node:child_process";
import { describe, expect, it } from "vitest";

import { benchVsNative } from "./bench.js";
import { BoundGenerator, cliCommand, cliGenerate } from "./index.js";

/** Reference draw straight from the CLI's text output. */
function cliText(dist: "exp" | "normal", n: number, seed: number): number[] {
  const [cmd, ...prefix] = cliCommand();
  const res = spawnSync(
    cmd,
    [...prefix, "gen", "--dist", dist, "-n", String(n), "--seed", String(seed)],
    { encoding: "utf8" },
  );
  expect(res.status).toBe(0);
  return res.stdout.trim().split("\n").map(Number);
}

describe("cliGenerate", () => {
  it("returns an empty array for size 0 without spawning", () => {
    expect(cliGenerate("exp", 0, 7)).toHaveLength(0);
  });

  it("rejects negative and fractional sizes", () => {
    expect(() => cliGenerate("exp", -1, 7)).toThrow(RangeError);
    expect(() => cliGenerate("exp", 2.5, 7)).toThrow(RangeError);
  });

  it("binary output matches the CLI text format bit-exactly", () => {
    const bin = cliGenerate("exp", 50, 7);
    const text = cliText("exp", 50, 7);
    expect(Array.from(bin)).toEqual(text);
  });
});

describe("BoundGenerator", () => {
  it("seed(7) exponential stream equals the core CLI output", () => {
    const gen = new BoundGenerator(0);
    gen.seed(7);
    const got = gen.exponential(10);
    expect(Array.from(got)).toEqual(cliText("exp", 10, 7));
    // first value pinned so a silent CLI change cannot slip through
    expect(got[0]).toBe(0.15069938164952687);
  });

  it("seed(7) normal stream equals the core CLI output", () => {
    const gen = new BoundGenerator(7);
    expect(Array.from(gen.normal(10))).toEqual(cliText("normal", 10, 7));
  });

  it("split requests continue the stream element-for-element", () => {
    const whole = new BoundGenerator(42).exponential(30);
    const gen = new BoundGenerator(42);
    const parts = [...gen.exponential(11), ...gen.exponential(0), ...gen.exponential(19)];
    expect(parts).toEqual(Array.from(whole));
  });

  it("the two distributions keep independent cursors", () => {
    const gen = new BoundGenerator(9);
    gen.exponential(25);
    expect(Array.from(gen.normal(5))).toEqual(cliText("normal", 5, 9));
  });

  it("seed() rewinds both streams", () => {
    const gen = new BoundGenerator(3);
    const first = Array.from(gen.exponential(8));
    gen.exponential(100);
    gen.seed(3);
    expect(Array.from(gen.exponential(8))).toEqual(first);
  });

  it("throws on negative size", () => {
    expect(() => new BoundGenerator(1).exponential(-5)).toThrow(RangeError);
  });

  it("exponential mean converges to 1", () => {
    const vals = new BoundGenerator(123).exponential(1_000_000);
    let sum = 0;
    for (const v of vals) sum += v;
    expect(Math.abs(sum / vals.length - 1.0)).toBeLessThan(3.5e-3);
  });
});

describe("benchVsNative", () => {
  it("produces a well-formed report", () => {
    const r = benchVsNative(200_000, "exp");
    expect(r.coreSeconds).toBeGreaterThan(0);
    expect(r.nativeSeconds).toBeGreaterThan(0);
    expect(r.ratio).toBeGreaterThan(0);
    expect(r.n).toBe(200_000);
  });
});
