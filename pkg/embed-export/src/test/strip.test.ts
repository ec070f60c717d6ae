import assert from "node:assert/strict";
import { test } from "node:test";

import { stripPatterns } from "../strip.js";

test("mentions, hashtags, urls and standalone numbers are dropped", () => {
  assert.equal(stripPatterns("@user hello #tag http://x.co 123 world"), "hello world");
});

test("digits embedded in words survive", () => {
  assert.equal(stripPatterns("covid19 2021"), "covid19");
});

test("whitespace collapses and ends trim", () => {
  assert.equal(stripPatterns("  a   b  "), "a b");
});

test("www urls are urls too", () => {
  assert.equal(stripPatterns("visit www.example.com now"), "visit now");
});

test("empty stays empty", () => {
  assert.equal(stripPatterns(""), "");
});
