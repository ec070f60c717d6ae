import assert from "node:assert/strict";
import { test } from "node:test";

import { formatValue, parseEmbeddingFile, renderEmbeddingFile } from "../format.js";

test("render writes the N D header and one row per doc", () => {
  const text = renderEmbeddingFile(
    [
      ["d1", [1, 2]],
      ["d2", [0.5, -0.25]],
    ],
    2,
  );
  const lines = text.trimEnd().split("\n");
  assert.equal(lines[0], "2 2");
  assert.equal(lines[1], "d1 1 2");
  assert.equal(lines[2], "d2 0.5 -0.25");
});

test("render rejects a wrong-length vector", () => {
  assert.throws(() => renderEmbeddingFile([["d1", [1, 2, 3]]], 2), /length 3, expected 2/);
});

test("roundtrip preserves ids and values at 6 significant digits", () => {
  const rows: Array<[string, number[]]> = [
    ["a", [0.123456789, -9.87654321e-5]],
    ["b", [1e6, 0]],
  ];
  const parsed = parseEmbeddingFile(renderEmbeddingFile(rows, 2));
  assert.equal(parsed.dim, 2);
  for (const [id, vec] of rows) {
    const got = parsed.rows.get(id)!;
    for (let i = 0; i < vec.length; i++) {
      assert.equal(got[i], Number(formatValue(vec[i])));
    }
  }
});

test("duplicate ids are rejected", () => {
  assert.throws(() => parseEmbeddingFile("2 1\nd1 1\nd1 2\n"), /duplicate doc id "d1"/);
});

test("ragged rows are rejected with the line number", () => {
  assert.throws(() => parseEmbeddingFile("2 2\nd1 1 2\nd2 1\n"), /line 3/);
});

test("header row-count mismatch is rejected", () => {
  assert.throws(() => parseEmbeddingFile("3 1\nd1 1\n"), /announced 3 rows, found 1/);
});
