/**
 * Bindings for the zigfast command line tool.
 *
 * The core library is consumed strictly through its CLI: variates arrive as
 * raw little-endian float64 bytes from `zigfast gen --format f64le`.  A
 * BoundGenerator therefore reproduces the core's stream bit-for-bit for a
 * given seed, element-for-element, across any split of calls.
 */

import { spawnSync } from "node:child_process";

export type Distribution = "exp" | "normal";

/** Resolve the CLI entry point; ZIGFAST_CLI overrides for odd installs. */
export function cliCommand(): string[] {
  const env = process.env.ZIGFAST_CLI;
  if (env) return env.split(" ");
  return ["zigfast"];
}

/** Run `zigfast gen` and return the decoded variates. */
export function cliGenerate(
  dist: Distribution,
  n: number,
  seed: number,
): Float64Array {
  if (!Number.isInteger(n) || n < 0) {
    throw new RangeError(`size must be a nonnegative integer, got ${n}`);
  }
  if (n === 0) return new Float64Array(0);
  const [cmd, ...prefix] = cliCommand();
  const args = [
    ...prefix,
    "gen",
    "--dist",
    dist,
    "-n",
    String(n),
    "--seed",
    String(seed),
    "--format",
    "f64le",
  ];
  const res = spawnSync(cmd, args, {
    maxBuffer: 64 * 1024 * 1024 + n * 8,
  });
  if (res.error) throw res.error;
  if (res.status !== 0) {
    throw new Error(
      `zigfast gen exited with ${res.status}: ${res.stderr?.toString() ?? ""}`,
    );
  }
  const buf: Buffer = res.stdout;
  if (buf.length !== n * 8) {
    throw new Error(`expected ${n * 8} bytes from zigfast gen, got ${buf.length}`);
  }
  // copy out of the Buffer pool so alignment is guaranteed
  const out = new Float64Array(n);
  for (let i = 0; i < n; i++) out[i] = buf.readDoubleLE(i * 8);
  return out;
}

/**
 * A seeded pair of variate streams backed by the core sampler.
 *
 * The CLI is stateless, so stream continuity is kept by regenerating the
 * already-consumed prefix on every call and slicing it off.  Cost grows with
 * total consumption; the intended use is a handful of bulk requests.
 */
export class BoundGenerator {
  private seedValue: number;
  private cursors: Record<Distribution, number> = { exp: 0, normal: 0 };

  constructor(seed: number) {
    this.seedValue = seed;
  }

  /** Reset both streams to the start of the stream for `value`. */
  seed(value: number): void {
    this.seedValue = value;
    this.cursors = { exp: 0, normal: 0 };
  }

  exponential(size: number): Float64Array {
    return this.take("exp", size);
  }

  normal(size: number): Float64Array {
    return this.take("normal", size);
  }

  private take(dist: Distribution, size: number): Float64Array {
    if (!Number.isInteger(size) || size < 0) {
      throw new RangeError(`size must be a nonnegative integer, got ${size}`);
    }
    const start = this.cursors[dist];
    const all = cliGenerate(dist, start + size, this.seedValue);
    this.cursors[dist] = start + size;
    return all.subarray(start);
  }
}
