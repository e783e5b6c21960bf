/**
 * Dense float64 kernels for training. Loop orders keep the innermost stride
 * unit-length; the a!==0 skips exploit ReLU sparsity in activations/deltas.
 */

/** C(m x n) = A(m x k) * B(k x n); C is overwritten. */
export function matmul(a: Float64Array, b: Float64Array, c: Float64Array,
                       m: number, k: number, n: number): void {
  c.fill(0);
  for (let i = 0; i < m; i++) {
    const arow = i * k;
    const crow = i * n;
    for (let p = 0; p < k; p++) {
      const av = a[arow + p];
      if (av === 0) continue;
      const brow = p * n;
      for (let j = 0; j < n; j++) {
        c[crow + j] += av * b[brow + j];
      }
    }
  }
}

/** C(m x n) = A^T(k x m) * B(k x n): weight gradients from activations. */
export function matmulTA(a: Float64Array, b: Float64Array, c: Float64Array,
                         k: number, m: number, n: number): void {
  c.fill(0);
  for (let p = 0; p < k; p++) {
    const arow = p * m;
    const brow = p * n;
    for (let i = 0; i < m; i++) {
      const av = a[arow + i];
      if (av === 0) continue;
      const crow = i * n;
      for (let j = 0; j < n; j++) {
        c[crow + j] += av * b[brow + j];
      }
    }
  }
}

/** C(m x n) = A(m x k) * B^T(n x k): delta back-propagation. */
export function matmulTB(a: Float64Array, b: Float64Array, c: Float64Array,
                         m: number, k: number, n: number): void {
  for (let i = 0; i < m; i++) {
    const arow = i * k;
    const crow = i * n;
    for (let j = 0; j < n; j++) {
      const brow = j * k;
      let s = 0;
      for (let p = 0; p < k; p++) {
        s += a[arow + p] * b[brow + p];
      }
      c[crow + j] = s;
    }
  }
}

export function reluInPlace(x: Float64Array): void {
  for (let i = 0; i < x.length; i++) {
    if (x[i] < 0) x[i] = 0;
  }
}

/** Zero delta entries where the forward activation was clipped. */
export function reluBackwardInPlace(delta: Float64Array, act: Float64Array): void {
  for (let i = 0; i < delta.length; i++) {
    if (act[i] <= 0) delta[i] = 0;
  }
}

export function argmaxRow(x: Float64Array, row: number, n: number): number {
  let best = 0;
  let bv = x[row * n];
  for (let j = 1; j < n; j++) {
    const v = x[row * n + j];
    if (v > bv) {
      bv = v;
      best = j;
    }
  }
  return best;
}
