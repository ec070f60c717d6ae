import * as fs from "node:fs";

import { readCorpus, CorpusRow } from "./csv.js";
import { renderEmbeddingFile } from "./format.js";
import { SplitMix64, unitVector } from "./rng.js";
import { stripPatterns } from "./strip.js";

export const DEFAULT_MODEL = "roberta-large-nli-stsb-mean-tokens";
export const DEFAULT_DIM = 1024;

export interface ExportJob {
  inPath: string;
  outPath: string;
  model?: string;
  textCol?: string;
  idCol?: string;
  /** input text is already cleaned; skip pattern stripping */
  cleaned?: boolean;
  batchSize?: number;
}

function loadRows(job: ExportJob): CorpusRow[] {
  const text = fs.readFileSync(job.inPath, "utf-8");
  const { rows } = readCorpus(text, job.textCol ?? "text", job.idCol);
  const seen = new Set<string>();
  for (const row of rows) {
    if (seen.has(row.id)) {
      throw new Error(`id collision in input corpus: ${JSON.stringify(row.id)}`);
    }
    seen.add(row.id);
  }
  return rows;
}

/** Deterministic seeded unit vectors in the embedding file format.
 *
 * Lets the benchmark suite run with no network and no model; the vectors
 * carry no signal by construction.
 */
export function exportFakeEmbeddings(job: ExportJob, seed: number, dim = DEFAULT_DIM): number {
  const rows = loadRows(job);
  const rng = new SplitMix64(seed);
  const out: Array<[string, Float64Array]> = rows.map((row) => [row.id, unitVector(rng, dim)]);
  fs.writeFileSync(job.outPath, renderEmbeddingFile(out, dim), "utf-8");
  return rows.length;
}

interface SentenceEncoder {
  dim: number;
  encode(texts: string[]): Promise<number[][]>;
}

async function loadTransformerEncoder(model: string): Promise<SentenceEncoder> {
  let transformers: any;
  try {
    transformers = await import("@xenova/transformers" as string);
  } catch {
    throw new Error(
      `model ${JSON.stringify(model)} is unavailable: install the optional ` +
        `@xenova/transformers package (and allow model downloads) or use --fake`,
    );
  }
  const extractor = await transformers.pipeline("feature-extraction", model);
  return {
    dim: DEFAULT_DIM,
    async encode(texts: string[]): Promise<number[][]> {
      const out: number[][] = [];
      for (const text of texts) {
        const result = await extractor(text, { pooling: "mean", normalize: false });
        out.push(Array.from(result.data as Iterable<number>));
      }
      return out;
    },
  };
}

/** Compute transformer sentence embeddings and write them, order-preserving.
 *
 * Text is pattern-stripped first unless the job marks it as pre-cleaned.
 */
export async function exportEmbeddings(job: ExportJob): Promise<number> {
  const rows = loadRows(job);
  const model = job.model ?? DEFAULT_MODEL;
  const encoder = await loadTransformerEncoder(model);
  const batchSize = job.batchSize ?? 32;
  const vectors: Array<[string, ArrayLike<number>]> = [];
  let dim: number | null = null;
  for (let start = 0; start < rows.length; start += batchSize) {
    const batch = rows.slice(start, start + batchSize);
    const texts = batch.map((r) => (job.cleaned ? r.text : stripPatterns(r.text)));
    const encoded = await encoder.encode(texts);
    for (let i = 0; i < batch.length; i++) {
      if (dim === null) dim = encoded[i].length;
      vectors.push([batch[i].id, encoded[i]]);
    }
  }
  const finalDim = dim ?? encoder.dim;
  fs.writeFileSync(job.outPath, renderEmbeddingFile(vectors, finalDim), "utf-8");
  return rows.length;
}
