import assert from "node:assert/strict";
import { spawnSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { test } from "node:test";

import { exportFakeEmbeddings } from "../exporter.js";

/** Cross-component round trip: the exported file must be consumable by the
 * benchmark toolkit through its public CLI (`run` with a sent2vec recipe),
 * i.e. purely through the documented file format and command surface. */

function writeLabeledCorpus(dir: string, n: number): string {
  const lines = ["tweet,class"];
  for (let i = 0; i < n; i++) {
    const hate = i % 2 === 0;
    const words = hate ? "vile trash scum filth" : "garden picnic melody sunny";
    lines.push(`${words} shared words here,${hate ? "hate" : "neither"}`);
  }
  const p = path.join(dir, "corpus.csv");
  fs.writeFileSync(p, lines.join("\n") + "\n", "utf-8");
  return p;
}

test("primary toolkit ingests the exported file with zero parse errors", () => {
  const probe = spawnSync("python3", ["-c", "import hatebench"], { encoding: "utf-8" });
  assert.equal(
    probe.status,
    0,
    "the benchmark toolkit must be installed (pip install -e ..) for the round-trip test",
  );

  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "embed-roundtrip-"));
  const corpus = writeLabeledCorpus(dir, 100);
  const emb = path.join(dir, "emb.txt");
  const n = exportFakeEmbeddings({ inPath: corpus, outPath: emb, textCol: "tweet" }, 1);
  assert.equal(n, 100);

  const outDir = path.join(dir, "run");
  const run = spawnSync(
    "python3",
    [
      "-m", "hatebench.cli", "run",
      "--recipe", "sent2vec+sentiment",
      "--clf", "nb",
      "--corpus", corpus,
      "--seed", "3",
      "--param", `sent2vec_source=${emb}`,
      "--out-dir", outDir,
    ],
    { encoding: "utf-8" },
  );
  assert.equal(run.status, 0, `primary run failed:\n${run.stdout}\n${run.stderr}`);

  const report = fs.readFileSync(path.join(outDir, "report.csv"), "utf-8").trimEnd().split("\n");
  assert.equal(report[0], "Classifier,Features,Accuracy,Precision,Recall,F1");
  assert.ok(report[1].startsWith("NB,Sent2Vec+Sentiment,"));

  const provenance = JSON.parse(fs.readFileSync(path.join(outDir, "provenance.json"), "utf-8"));
  assert.equal(provenance.rows[0].width, 1025); // 1024 embedding dims + sentiment
});
