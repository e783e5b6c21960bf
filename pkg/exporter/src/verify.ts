/**
 * Framework-free round-trip verification: reload the exported float32
 * weights, run the forward pass in float64 with plain loops, and compare the
 * measured test accuracy against the manifest.
 */

import { readDataset, readManifest, readModelWeights } from "./nnwf.js";
import { argmaxRow, matmul, reluInPlace } from "./tensor.js";

export interface RoundtripReport {
  accuracy: number;
  manifestAccuracy: number;
  recordedAccuracy?: number;
  predictionMismatches?: number;
  ok: boolean;
}

export function forwardFromFiles(sizes: number[], weights: Float64Array[],
                                 x: Float64Array, n: number): Float64Array {
  let act = x;
  for (let l = 0; l < weights.length; l++) {
    const out = new Float64Array(n * sizes[l + 1]);
    matmul(act, weights[l], out, n, sizes[l], sizes[l + 1]);
    if (l < weights.length - 1) reluInPlace(out);
    act = out;
  }
  return act;
}

export function predictionsFromFiles(modelDir: string, x: Float64Array,
                                     count: number, dim: number,
                                     chunk = 512): Uint8Array {
  const { sizes, weights } = readModelWeights(modelDir);
  if (sizes[0] !== dim) throw new Error(`model expects ${sizes[0]} inputs, data has ${dim}`);
  const k = sizes[sizes.length - 1];
  const preds = new Uint8Array(count);
  for (let start = 0; start < count; start += chunk) {
    const m = Math.min(chunk, count - start);
    const logits = forwardFromFiles(sizes, weights,
                                    x.subarray(start * dim, (start + m) * dim), m);
    for (let i = 0; i < m; i++) preds[start + i] = argmaxRow(logits, i, k);
  }
  return preds;
}

export function verifyRoundtrip(modelDir: string, testDir: string,
                                tolerance = 0.001): RoundtripReport {
  const manifest = readManifest(modelDir);
  const test = readDataset(testDir);
  const preds = predictionsFromFiles(modelDir, test.x, test.count, test.dim);
  let correct = 0;
  for (let i = 0; i < test.count; i++) {
    if (preds[i] === test.y[i]) correct++;
  }
  const accuracy = correct / test.count;
  const manifestAccuracy = manifest.training.test_accuracy as number;
  const report: RoundtripReport = {
    accuracy,
    manifestAccuracy,
    ok: Math.abs(accuracy - manifestAccuracy) <= tolerance,
  };
  if (manifest.recorded_predictions) {
    const rec = manifest.recorded_predictions;
    report.recordedAccuracy = rec.accuracy;
    let mismatches = 0;
    const m = Math.min(rec.argmax.length, preds.length);
    for (let i = 0; i < m; i++) {
      if (rec.argmax[i] !== preds[i]) mismatches++;
    }
    report.predictionMismatches = mismatches;
    report.ok = report.ok && mismatches === 0;
  }
  return report;
}
