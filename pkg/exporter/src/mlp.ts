/**
 * Bias-free multi-layer perceptron with ReLU activations, trained by plain
 * minibatch SGD with a fixed step-decay schedule. Float64 math throughout;
 * export casts the final weights to float32.
 */

import { Rng } from "./rng.js";
import { argmaxRow, matmul, matmulTA, matmulTB, reluBackwardInPlace,
         reluInPlace } from "./tensor.js";

export interface TrainConfig {
  epochs: number;
  batchSize: number;
  learningRate: number;
  lrDecay: number;        // multiplied onto the rate after each epoch
}

export class Mlp {
  readonly sizes: number[];
  readonly weights: Float64Array[];

  constructor(sizes: number[], seed: number) {
    this.sizes = sizes.slice();
    this.weights = [];
    const rng = new Rng(seed);
    for (let l = 0; l < sizes.length - 1; l++) {
      const [d, g] = [sizes[l], sizes[l + 1]];
      const w = new Float64Array(d * g);
      const scale = Math.sqrt(2.0 / d); // He init for the ReLU stack
      for (let i = 0; i < w.length; i++) w[i] = scale * rng.gaussian();
      this.weights.push(w);
    }
  }

  get depth(): number {
    return this.weights.length;
  }

  /** Logits for a batch; optionally collects hidden activations for backprop. */
  forward(x: Float64Array, n: number, keep?: Float64Array[]): Float64Array {
    let act = x;
    for (let l = 0; l < this.depth; l++) {
      const [d, g] = [this.sizes[l], this.sizes[l + 1]];
      const out = new Float64Array(n * g);
      matmul(act, this.weights[l], out, n, d, g);
      if (l < this.depth - 1) reluInPlace(out);
      if (keep) keep.push(out);
      act = out;
    }
    return act;
  }

  accuracy(x: Float64Array, labels: Uint8Array, n: number, chunk = 512): number {
    const dIn = this.sizes[0];
    const k = this.sizes[this.sizes.length - 1];
    let correct = 0;
    for (let start = 0; start < n; start += chunk) {
      const m = Math.min(chunk, n - start);
      const logits = this.forward(x.subarray(start * dIn, (start + m) * dIn), m);
      for (let i = 0; i < m; i++) {
        if (argmaxRow(logits, i, k) === labels[start + i]) correct++;
      }
    }
    return correct / n;
  }

  predictions(x: Float64Array, n: number, chunk = 512): Uint8Array {
    const dIn = this.sizes[0];
    const k = this.sizes[this.sizes.length - 1];
    const out = new Uint8Array(n);
    for (let start = 0; start < n; start += chunk) {
      const m = Math.min(chunk, n - start);
      const logits = this.forward(x.subarray(start * dIn, (start + m) * dIn), m);
      for (let i = 0; i < m; i++) out[start + i] = argmaxRow(logits, i, k);
    }
    return out;
  }

  /** One SGD epoch over a seeded shuffle; returns the mean cross-entropy. */
  trainEpoch(x: Float64Array, labels: Uint8Array, n: number,
             lr: number, batchSize: number, rng: Rng): number {
    const dIn = this.sizes[0];
    const k = this.sizes[this.sizes.length - 1];
    const order = new Int32Array(n);
    for (let i = 0; i < n; i++) order[i] = i;
    rng.shuffle(order);

    const xb = new Float64Array(batchSize * dIn);
    let lossSum = 0;
    let seen = 0;
    for (let start = 0; start < n; start += batchSize) {
      const m = Math.min(batchSize, n - start);
      for (let i = 0; i < m; i++) {
        xb.set(x.subarray(order[start + i] * dIn, (order[start + i] + 1) * dIn),
               i * dIn);
      }
      const batch = m === batchSize ? xb : xb.subarray(0, m * dIn);
      const acts: Float64Array[] = [];
      const logits = this.forward(batch, m, acts);

      // softmax cross-entropy delta: (p - onehot) / m
      let delta = new Float64Array(m * k);
      for (let i = 0; i < m; i++) {
        let mx = -Infinity;
        for (let j = 0; j < k; j++) mx = Math.max(mx, logits[i * k + j]);
        let z = 0;
        for (let j = 0; j < k; j++) z += Math.exp(logits[i * k + j] - mx);
        const label = labels[order[start + i]];
        lossSum += -(logits[i * k + label] - mx - Math.log(z));
        for (let j = 0; j < k; j++) {
          delta[i * k + j] = (Math.exp(logits[i * k + j] - mx) / z
                              - (j === label ? 1 : 0)) / m;
        }
      }
      seen += m;

      for (let l = this.depth - 1; l >= 0; l--) {
        const [d, g] = [this.sizes[l], this.sizes[l + 1]];
        const below = l === 0 ? batch : acts[l - 1];
        const grad = new Float64Array(d * g);
        matmulTA(below, delta, grad, m, d, g);
        if (l > 0) {
          const prev = new Float64Array(m * d);
          matmulTB(delta, this.weights[l], prev, m, g, d);
          reluBackwardInPlace(prev, acts[l - 1]);
          delta = prev;
        }
        const w = this.weights[l];
        for (let i = 0; i < w.length; i++) w[i] -= lr * grad[i];
      }
    }
    return lossSum / seen;
  }

  train(x: Float64Array, labels: Uint8Array, n: number, cfg: TrainConfig,
        seed: number, log?: (msg: string) => void): void {
    const rng = new Rng(seed ^ 0x5eed);
    let lr = cfg.learningRate;
    for (let e = 0; e < cfg.epochs; e++) {
      const loss = this.trainEpoch(x, labels, n, lr, cfg.batchSize, rng);
      if (log) log(`epoch ${e + 1}/${cfg.epochs}: lr=${lr.toFixed(4)} loss=${loss.toFixed(4)}`);
      lr *= cfg.lrDecay;
    }
  }
}
