/**
 * Throughput comparison: zigfast-backed generation vs plain JS generators.
 *
 * Report-only; the ratio depends on hardware, node version, and process
 * spawn overhead, so there is no pass/fail threshold.  Spawn overhead
 * amortizes with size, which is the point of the array-at-a-time API.
 */

import { performance } from "node:perf_hooks";
import { BoundGenerator } from "./index.js";

export interface BenchReport {
  distribution: "exp" | "normal";
  n: number;
  coreSeconds: number;
  nativeSeconds: number;
  /** native time over core time; > 1 means the core wins */
  ratio: number;
}

function nativeExponential(n: number): Float64Array {
  const out = new Float64Array(n);
  for (let i = 0; i < n; i++) out[i] = -Math.log(1.0 - Math.random());
  return out;
}

function nativeNormal(n: number): Float64Array {
  // Box-Muller, the usual pure-JS fallback
  const out = new Float64Array(n);
  for (let i = 0; i < n; i += 2) {
    const r = Math.sqrt(-2.0 * Math.log(1.0 - Math.random()));
    const t = 2.0 * Math.PI * Math.random();
    out[i] = r * Math.cos(t);
    if (i + 1 < n) out[i + 1] = r * Math.sin(t);
  }
  return out;
}

export function benchVsNative(
  n: number,
  dist: "exp" | "normal" = "exp",
): BenchReport {
  const gen = new BoundGenerator(1);
  gen.exponential(1); // warm the CLI (imports, JIT) outside the timed region

  const t0 = performance.now();
  gen.seed(1);
  if (dist === "exp") gen.exponential(n);
  else gen.normal(n);
  const coreSeconds = (performance.now() - t0) / 1000;

  const t1 = performance.now();
  if (dist === "exp") nativeExponential(n);
  else nativeNormal(n);
  const nativeSeconds = (performance.now() - t1) / 1000;

  return { distribution: dist, n, coreSeconds, nativeSeconds, ratio: nativeSeconds / coreSeconds };
}

const isMain =
  process.argv[1] !== undefined && import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");

if (isMain) {
  const n = Number(process.argv[2] ?? 10_000_000);
  for (const dist of ["exp", "normal"] as const) {
    const r = benchVsNative(n, dist);
    console.log(
      `${dist}: core ${r.coreSeconds.toFixed(3)}s, native ${r.nativeSeconds.toFixed(3)}s, ` +
        `ratio ${r.ratio.toFixed(2)}x (n=${r.n})`,
    );
  }
}
