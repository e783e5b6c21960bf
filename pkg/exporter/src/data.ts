/** Data sources: the bundled MNIST IDX files and a synthetic blob set. */

import { createRequire } from "node:module";
import { dirname, join } from "node:path";

import { readIdxImages, readIdxLabels } from "./idx.js";
import { Rng } from "./rng.js";

export interface Split {
  x: Float64Array;   // sample-major, row-major, normalized
  y: Uint8Array;
  count: number;
  dim: number;
}

function mnistDataDir(): string {
  const require = createRequire(import.meta.url);
  return join(dirname(require.resolve("mnist-data/package.json")), "data");
}

export function loadMnist(): { train: Split; test: Split } {
  const dir = mnistDataDir();
  const load = (img: string, lab: string): Split => {
    const images = readIdxImages(join(dir, img));
    const y = readIdxLabels(join(dir, lab));
    if (y.length !== images.count) {
      throw new Error(`label count ${y.length} != image count ${images.count}`);
    }
    const dim = images.rows * images.cols;
    const x = new Float64Array(images.count * dim);
    for (let i = 0; i < x.length; i++) x[i] = images.pixels[i] / 255.0;
    return { x, y, count: images.count, dim };
  };
  return {
    train: load("train-images-idx3-ubyte", "train-labels-idx1-ubyte"),
    test: load("t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"),
  };
}

/** Two antipodal Gaussian blobs in `dim` dimensions: centers at +-sep along a
 * random direction, so the classes are (2*sep/spread) sigma apart and a
 * linear boundary separates them essentially perfectly. */
export function makeBlobs(count: number, dim: number, seed: number,
                          sep = 2.0, spread = 0.6): Split {
  const rng = new Rng(seed);
  const axis = new Float64Array(dim);
  let norm = 0;
  for (let i = 0; i < dim; i++) {
    axis[i] = rng.gaussian();
    norm += axis[i] * axis[i];
  }
  norm = Math.sqrt(norm);
  const centers: Float64Array[] = [new Float64Array(dim), new Float64Array(dim)];
  for (let i = 0; i < dim; i++) {
    centers[0][i] = -sep * axis[i] / norm;
    centers[1][i] = +sep * axis[i] / norm;
  }
  const x = new Float64Array(count * dim);
  const y = new Uint8Array(count);
  for (let i = 0; i < count; i++) {
    const c = rng.int(2);
    y[i] = c;
    for (let j = 0; j < dim; j++) {
      x[i * dim + j] = centers[c][j] + spread * rng.gaussian();
    }
  }
  return { x, y, count, dim };
}
