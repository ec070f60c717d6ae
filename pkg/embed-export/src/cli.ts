#!/usr/bin/env node
/** embed-export CLI.
 *
 *   export --in corpus.csv --out emb.txt [--model NAME] [--fake --seed S]
 *          [--text-col NAME] [--id-col NAME] [--cleaned] [--dim D]
 *
 * Exit codes: 0 success, 1 export failure, 2 usage errors.
 */

import { parseArgs } from "node:util";

import { DEFAULT_MODEL, exportEmbeddings, exportFakeEmbeddings } from "./exporter.js";

const USAGE = `usage: embed-export export --in corpus.csv --out emb.txt
                    [--model NAME] [--fake --seed S] [--dim D]
                    [--text-col NAME] [--id-col NAME] [--cleaned]

Writes sentence embeddings in the 'N D' header + 'doc_id v1 ... vD' row
format. --fake emits seeded random unit vectors (offline, deterministic);
otherwise the named transformer model (default ${DEFAULT_MODEL})
computes real embeddings on pattern-stripped text (--cleaned skips the
stripping for pre-cleaned input).`;

export async function main(argv: string[]): Promise<number> {
  const [command, ...rest] = argv;
  if (command === "--help" || command === "-h" || command === undefined) {
    console.log(USAGE);
    return command === undefined ? 2 : 0;
  }
  if (command !== "export") {
    console.error(`unknown command ${JSON.stringify(command)}\n${USAGE}`);
    return 2;
  }
  let values;
  try {
    ({ values } = parseArgs({
      args: rest,
      options: {
        in: { type: "string" },
        out: { type: "string" },
        model: { type: "string" },
        fake: { type: "boolean", default: false },
        seed: { type: "string", default: "1" },
        dim: { type: "string", default: "1024" },
        "text-col": { type: "string", default: "text" },
        "id-col": { type: "string" },
        cleaned: { type: "boolean", default: false },
        help: { type: "boolean", default: false },
      },
    }));
  } catch (err) {
    console.error(`${(err as Error).message}\n${USAGE}`);
    return 2;
  }
  if (values.help) {
    console.log(USAGE);
    return 0;
  }
  if (!values.in || !values.out) {
    console.error(`--in and --out are required\n${USAGE}`);
    return 2;
  }
  const job = {
    inPath: values.in,
    outPath: values.out,
    model: values.model,
    textCol: values["text-col"],
    idCol: values["id-col"],
    cleaned: values.cleaned,
  };
  try {
    if (values.fake) {
      const n = exportFakeEmbeddings(job, parseInt(values.seed, 10), parseInt(values.dim, 10));
      console.log(`wrote ${n} fake embedding rows (dim ${values.dim}) -> ${values.out}`);
    } else {
      const n = await exportEmbeddings(job);
      console.log(`wrote ${n} embedding rows -> ${values.out}`);
    }
    return 0;
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === `file://${process.argv[1]}`;
if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
