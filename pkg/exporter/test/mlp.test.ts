import { describe, expect, it } from "vitest";

import { makeBlobs } from "../src/data.js";
import { Mlp } from "../src/mlp.js";
import { matmul, matmulTA, matmulTB } from "../src/tensor.js";
import { Rng } from "../src/rng.js";

function naiveMatmul(a: number[][], b: number[][]): number[][] {
  const m = a.length, k = b.length, n = b[0].length;
  const c = Array.from({ length: m }, () => new Array<number>(n).fill(0));
  for (let i = 0; i < m; i++)
    for (let j = 0; j < n; j++)
      for (let p = 0; p < k; p++) c[i][j] += a[i][p] * b[p][j];
  return c;
}

function rand2d(m: number, n: number, rng: Rng): number[][] {
  return Array.from({ length: m }, () =>
    Array.from({ length: n }, () => rng.gaussian()));
}

function flat(a: number[][]): Float64Array {
  return new Float64Array(a.flat());
}

describe("tensor kernels", () => {
  it("matmul variants agree with the naive oracle", () => {
    const rng = new Rng(1);
    const A = rand2d(4, 6, rng);
    const B = rand2d(6, 5, rng);
    const ref = naiveMatmul(A, B);

    const c1 = new Float64Array(4 * 5);
    matmul(flat(A), flat(B), c1, 4, 6, 5);
    expect(Array.from(c1)).toEqual(ref.flat());

    // A^T * B with A stored transposed
    const At = Array.from({ length: 6 }, (_, p) => A.map((row) => row[p]));
    const c2 = new Float64Array(4 * 5);
    matmulTA(flat(At), flat(B), c2, 6, 4, 5);
    ref.flat().forEach((v, i) => expect(c2[i]).toBeCloseTo(v, 12));

    // A * B^T with B stored transposed
    const Bt = Array.from({ length: 5 }, (_, j) => B.map((row) => row[j]));
    const c3 = new Float64Array(4 * 5);
    matmulTB(flat(A), flat(Bt), c3, 4, 6, 5);
    ref.flat().forEach((v, i) => expect(c3[i]).toBeCloseTo(v, 12));
  });
});

describe("mlp", () => {
  it("backprop gradients match central finite differences", () => {
    const sizes = [5, 4, 3];
    const n = 8;
    const rng = new Rng(11);
    const x = new Float64Array(n * 5);
    for (let i = 0; i < x.length; i++) x[i] = rng.gaussian();
    const y = new Uint8Array(n);
    for (let i = 0; i < n; i++) y[i] = rng.int(3);

    const loss = (m: Mlp): number => {
      const logits = m.forward(x, n);
      let total = 0;
      for (let i = 0; i < n; i++) {
        let mx = -Infinity;
        for (let j = 0; j < 3; j++) mx = Math.max(mx, logits[i * 3 + j]);
        let z = 0;
        for (let j = 0; j < 3; j++) z += Math.exp(logits[i * 3 + j] - mx);
        total += -(logits[i * 3 + y[i]] - mx - Math.log(z));
      }
      return total / n;
    };

    // analytic gradient = weight delta after one full-batch step at lr=1
    const model = new Mlp(sizes, 3);
    const before = model.weights.map((w) => w.slice());
    const noShuffle = new Rng(0);
    noShuffle.shuffle = () => {};   // keep sample order for the comparison
    model.trainEpoch(x, y, n, 1.0, n, noShuffle as Rng);
    const analytic = model.weights.map((w, l) =>
      Array.from(w, (v, i) => before[l][i] - v));

    const probe = new Mlp(sizes, 3);
    const eps = 1e-5;
    for (let l = 0; l < probe.depth; l++) {
      for (const i of [0, 3, probe.weights[l].length - 1]) {
        const keep = probe.weights[l][i];
        probe.weights[l][i] = keep + eps;
        const up = loss(probe);
        probe.weights[l][i] = keep - eps;
        const down = loss(probe);
        probe.weights[l][i] = keep;
        const fd = (up - down) / (2 * eps);
        expect(analytic[l][i]).toBeCloseTo(fd, 6);
      }
    }
  });

  it("trains blobs to high accuracy deterministically", () => {
    const data = makeBlobs(1024, 16, 5);
    const run = (): { acc: number; w: Float64Array } => {
      const m = new Mlp([16, 8, 2], 77);
      m.train(data.x, data.y, data.count,
              { epochs: 30, batchSize: 32, learningRate: 0.1, lrDecay: 0.95 }, 77);
      return { acc: m.accuracy(data.x, data.y, data.count), w: m.weights[0] };
    };
    const a = run();
    const b = run();
    expect(a.acc).toBeGreaterThanOrEqual(0.99);
    expect(Array.from(a.w)).toEqual(Array.from(b.w));
  });
});
