/** The sentence-embedding file format consumed by the benchmark toolkit:
 * a header line "N D", then one "doc_id v1 ... vD" row per document,
 * space-separated ASCII floats, UTF-8. */

export function formatValue(v: number): string {
  // 6 significant digits, re-parsed so the emitted form is the shortest
  // representation (plain or exponent), always parseable as a float
  return String(parseFloat(v.toPrecision(6)));
}

export function renderEmbeddingFile(rows: Array<[string, ArrayLike<number>]>, dim: number): string {
  const lines: string[] = [`${rows.length} ${dim}`];
  for (const [id, vec] of rows) {
    if (vec.length !== dim) {
      throw new Error(`vector for ${JSON.stringify(id)} has length ${vec.length}, expected ${dim}`);
    }
    const parts = new Array<string>(dim);
    for (let i = 0; i < dim; i++) parts[i] = formatValue(vec[i]);
    lines.push(`${id} ${parts.join(" ")}`);
  }
  return lines.join("\n") + "\n";
}

export interface ParsedEmbeddings {
  dim: number;
  rows: Map<string, Float64Array>;
}

/** Reader used by the round-trip tests; mirrors the consuming loader. */
export function parseEmbeddingFile(text: string): ParsedEmbeddings {
  const lines = text.split("\n");
  const header = lines[0].trim().split(" ");
  if (header.length !== 2) throw new Error("bad header: expected 'N D'");
  const n = parseInt(header[0], 10);
  const dim = parseInt(header[1], 10);
  const rows = new Map<string, Float64Array>();
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i].trim();
    if (!line) continue;
    const parts = line.split(" ");
    const id = parts[0];
    if (rows.has(id)) throw new Error(`duplicate doc id ${JSON.stringify(id)} on line ${i + 1}`);
    const vec = new Float64Array(parts.length - 1);
    for (let j = 1; j < parts.length; j++) {
      const v = Number(parts[j]);
      if (Number.isNaN(v)) throw new Error(`non-numeric value on line ${i + 1}`);
      vec[j - 1] = v;
    }
    if (vec.length !== dim) {
      throw new Error(`ragged row on line ${i + 1}: got ${vec.length}, expected ${dim}`);
    }
    rows.set(id, vec);
  }
  if (rows.size !== n) throw new Error(`header announced ${n} rows, found ${rows.size}`);
  return { dim, rows };
}
