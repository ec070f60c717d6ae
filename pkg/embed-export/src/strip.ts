/** Pattern stripping applied before embedding (default behavior).
 *
 * Mirrors the consuming toolkit's cleaner: drop @-mentions, #-hashtags,
 * URLs and standalone digit runs, collapse whitespace. Transformer
 * tokenizers handle inflection and stopwords themselves, so nothing more
 * is removed here; --cleaned skips even this for pre-cleaned input.
 */

const URL_RE = /(?:https?:\/\/|www\.)\S+/g;
const MENTION_RE = /@\w+/g;
const HASHTAG_RE = /#\w+/g;
const NUMBER_RE = /(?<!\S)\d+(?!\S)/g;

export function stripPatterns(text: string): string {
  return text
    .normalize("NFC")
    .replace(URL_RE, " ")
    .replace(MENTION_RE, " ")
    .replace(HASHTAG_RE, " ")
    .replace(NUMBER_RE, " ")
    .replace(/\s+/g, " ")
    .trim();
}
