/** Reader for the classic IDX image/label files (big-endian headers). */

import { readFileSync } from "node:fs";

export interface IdxImages {
  count: number;
  rows: number;
  cols: number;
  pixels: Uint8Array; // count * rows * cols, sample-major
}

export function readIdxImages(path: string): IdxImages {
  const buf = readFileSync(path);
  const magic = buf.readUInt32BE(0);
  if (magic !== 2051) throw new Error(`${path}: bad image magic ${magic}`);
  const count = buf.readUInt32BE(4);
  const rows = buf.readUInt32BE(8);
  const cols = buf.readUInt32BE(12);
  const pixels = new Uint8Array(buf.buffer, buf.byteOffset + 16, count * rows * cols);
  return { count, rows, cols, pixels: new Uint8Array(pixels) };
}

export function readIdxLabels(path: string): Uint8Array {
  const buf = readFileSync(path);
  const magic = buf.readUInt32BE(0);
  if (magic !== 2049) throw new Error(`${path}: bad label magic ${magic}`);
  const count = buf.readUInt32BE(4);
  return new Uint8Array(buf.buffer, buf.byteOffset + 8, count).slice();
}
