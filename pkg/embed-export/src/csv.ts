/** Minimal RFC-4180 CSV reader: quoted fields, doubled-quote escapes,
 * embedded commas and newlines, CRLF or LF row endings. */

export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let row: string[] = [];
  let field = "";
  let inQuotes = false;
  let i = 0;
  const push = () => {
    row.push(field);
    field = "";
  };
  const endRow = () => {
    push();
    rows.push(row);
    row = [];
  };
  while (i < text.length) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
          continue;
        }
        inQuotes = false;
        i++;
        continue;
      }
      field += ch;
      i++;
      continue;
    }
    if (ch === '"' && field === "") {
      inQuotes = true;
      i++;
      continue;
    }
    if (ch === ",") {
      push();
      i++;
      continue;
    }
    if (ch === "\r" && text[i + 1] === "\n") {
      endRow();
      i += 2;
      continue;
    }
    if (ch === "\n") {
      endRow();
      i++;
      continue;
    }
    field += ch;
    i++;
  }
  if (field !== "" || row.length > 0) endRow();
  return rows;
}

export interface CorpusRow {
  id: string;
  text: string;
}

/** Read (id, text) rows from a headered CSV.
 *
 * Without an id column the row index becomes the id, matching the loader
 * on the consuming side. Rows shorter than the text column are skipped.
 */
export function readCorpus(
  csvText: string,
  textCol = "text",
  idCol?: string,
): { rows: CorpusRow[]; skipped: number } {
  const parsed = parseCsv(csvText);
  if (parsed.length === 0) {
    throw new Error("corpus CSV has no header row");
  }
  const header = parsed[0];
  const textIdx = header.indexOf(textCol);
  if (textIdx < 0) {
    throw new Error(`text column ${JSON.stringify(textCol)} not found in header`);
  }
  let idIdx = -1;
  if (idCol !== undefined) {
    idIdx = header.indexOf(idCol);
    if (idIdx < 0) throw new Error(`id column ${JSON.stringify(idCol)} not found in header`);
  }
  const rows: CorpusRow[] = [];
  let skipped = 0;
  for (let r = 1; r < parsed.length; r++) {
    const cells = parsed[r];
    if (cells.length === 1 && cells[0] === "") continue; // trailing blank line
    if (cells.length <= Math.max(textIdx, idIdx)) {
      skipped++;
      continue;
    }
    rows.push({
      id: idIdx >= 0 ? cells[idIdx] : String(r - 1),
      text: cells[textIdx],
    });
  }
  return { rows, skipped };
}
