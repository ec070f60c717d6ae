/**
 * Deterministic seeded randomness for the fake exporter.
 *
 * SplitMix64 over BigInt gives exact 64-bit arithmetic, so the stream (and
 * therefore every exported file) is reproducible across platforms and runs.
 */

const MASK64 = (1n << 64n) - 1n;

export class SplitMix64 {
  private state: bigint;

  constructor(seed: number | bigint) {
    this.state = BigInt(seed) & MASK64;
  }

  nextU64(): bigint {
    this.state = (this.state + 0x9e3779b97f4a7c15n) & MASK64;
    let z = this.state;
    z = ((z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n) & MASK64;
    z = ((z ^ (z >> 27n)) * 0x94d049bb133111ebn) & MASK64;
    return z ^ (z >> 31n);
  }

  /** Uniform float in [0, 1) with 53 bits of precision. */
  nextFloat(): number {
    return Number(this.nextU64() >> 11n) / 2 ** 53;
  }

  /** Standard normal via Box-Muller (consumes two uniforms). */
  nextGaussian(): number {
    let u = this.nextFloat();
    while (u === 0) u = this.nextFloat();
    const v = this.nextFloat();
    return Math.sqrt(-2 * Math.log(u)) * Math.cos(2 * Math.PI * v);
  }
}

/** Seeded random unit vector of the given dimension. */
export function unitVector(rng: SplitMix64, dim: number): Float64Array {
  const out = new Float64Array(dim);
  let normSq = 0;
  for (let i = 0; i < dim; i++) {
    const g = rng.nextGaussian();
    out[i] = g;
    normSq += g * g;
  }
  const norm = Math.sqrt(normSq);
  for (let i = 0; i < dim; i++) out[i] /= norm;
  return out;
}
