/**
 * NNWF writers/readers.
 *
 * Model directory: manifest.json plus one raw .bin per weight tensor
 * (little-endian IEEE-754 float32, row-major, no header; Dense tensors are
 * in_features x out_features). Dataset directory: images.bin (float32,
 * sample-major), labels.bin (uint8), dataset.json.
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { Mlp } from "./mlp.js";
import { Split } from "./data.js";

export interface DenseEntry {
  kind: "Dense";
  in_features: number;
  out_features: number;
  weights: string;
}

export interface Manifest {
  format: string;
  name: string;
  class_count: number;
  input_shape: number[];
  layers: Array<DenseEntry | { kind: "ReLU" | "Flatten" }>;
  training: Record<string, unknown>;
  recorded_predictions?: {
    split: string;
    accuracy: number;
    argmax: number[];
  };
}

function toLeFloat32Bytes(values: Float64Array): Buffer {
  const buf = Buffer.alloc(values.length * 4);
  for (let i = 0; i < values.length; i++) buf.writeFloatLE(values[i], i * 4);
  return buf;
}

export function writeModel(dir: string, name: string, model: Mlp,
                           training: Record<string, unknown>): Manifest {
  mkdirSync(dir, { recursive: true });
  const layers: Manifest["layers"] = [];
  for (let l = 0; l < model.depth; l++) {
    const fname = `layer${String(l + 1).padStart(2, "0")}_dense.bin`;
    writeFileSync(join(dir, fname), toLeFloat32Bytes(model.weights[l]));
    layers.push({ kind: "Dense", in_features: model.sizes[l],
                  out_features: model.sizes[l + 1], weights: fname });
    if (l < model.depth - 1) layers.push({ kind: "ReLU" });
  }
  const manifest: Manifest = {
    format: "nnwf/1",
    name,
    class_count: model.sizes[model.sizes.length - 1],
    input_shape: [model.sizes[0]],
    layers,
    training,
  };
  writeManifest(dir, manifest);
  return manifest;
}

export function writeManifest(dir: string, manifest: Manifest): void {
  writeFileSync(join(dir, "manifest.json"), JSON.stringify(manifest, null, 2) + "\n");
}

export function readManifest(dir: string): Manifest {
  return JSON.parse(readFileSync(join(dir, "manifest.json"), "utf8")) as Manifest;
}

/** Reload exported float32 tensors, widened to float64. */
export function readModelWeights(dir: string): { sizes: number[]; weights: Float64Array[] } {
  const manifest = readManifest(dir);
  const sizes: number[] = [];
  const weights: Float64Array[] = [];
  for (const entry of manifest.layers) {
    if (entry.kind !== "Dense") continue;
    const raw = readFileSync(join(dir, entry.weights));
    const n = entry.in_features * entry.out_features;
    if (raw.length !== 4 * n) {
      throw new Error(`${entry.weights}: ${raw.length} bytes != 4*${n}`);
    }
    const w = new Float64Array(n);
    for (let i = 0; i < n; i++) w[i] = raw.readFloatLE(i * 4);
    if (sizes.length === 0) sizes.push(entry.in_features);
    sizes.push(entry.out_features);
    weights.push(w);
  }
  return { sizes, weights };
}

export function writeDataset(dir: string, split: Split, normalization: string,
                             limit?: number): number {
  mkdirSync(dir, { recursive: true });
  const n = limit === undefined ? split.count : Math.min(limit, split.count);
  const x = split.x.subarray(0, n * split.dim);
  writeFileSync(join(dir, "images.bin"), toLeFloat32Bytes(new Float64Array(x)));
  writeFileSync(join(dir, "labels.bin"), Buffer.from(split.y.subarray(0, n)));
  const meta = { count: n, shape: [split.dim], classes: 10, normalization };
  writeFileSync(join(dir, "dataset.json"), JSON.stringify(meta, null, 2) + "\n");
  return n;
}

export function readDataset(dir: string): Split {
  const meta = JSON.parse(readFileSync(join(dir, "dataset.json"), "utf8"));
  const dim = (meta.shape as number[]).reduce((a, b) => a * b, 1);
  const raw = readFileSync(join(dir, "images.bin"));
  const n = meta.count as number;
  if (raw.length !== 4 * n * dim) {
    throw new Error(`images.bin: ${raw.length} bytes != 4*${n}*${dim}`);
  }
  const x = new Float64Array(n * dim);
  for (let i = 0; i < x.length; i++) x[i] = raw.readFloatLE(i * 4);
  const y = new Uint8Array(readFileSync(join(dir, "labels.bin")));
  if (y.length !== n) throw new Error(`labels.bin: ${y.length} labels != ${n}`);
  return { x, y, count: n, dim };
}
