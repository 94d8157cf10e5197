import { describe, expect, it } from "vitest";

import {
  DEFAULT_STATE,
  ExplorerState,
  normalizeHex,
  parseRatioList,
  parseState,
  serializeState,
} from "../src/state";

describe("normalizeHex", () => {
  it("lowercases and prefixes", () => {
    expect(normalizeHex("#FF8800")).toBe("#ff8800");
    expect(normalizeHex("ff8800")).toBe("#ff8800");
    expect(normalizeHex("  #abcdef ")).toBe("#abcdef");
  });

  it("rejects junk", () => {
    for (const bad of ["zzz", "#12345", "#12345678", "", "#ggg000"]) {
      expect(normalizeHex(bad)).toBeNull();
    }
  });
});

describe("parseRatioList", () => {
  it("accepts p:q and p/q tokens", () => {
    expect(parseRatioList("3:2, 4/3")).toEqual({
      valid: ["3:2", "4:3"],
      invalid: [],
    });
  });

  it("flags a zero denominator without dropping valid tokens", () => {
    const parsed = parseRatioList("3:2, 3:0, 5:4");
    expect(parsed.valid).toEqual(["3:2", "5:4"]);
    expect(parsed.invalid).toEqual(["3:0"]);
  });

  it("flags non-numeric tokens", () => {
    expect(parseRatioList("fifth").invalid).toEqual(["fifth"]);
    expect(parseRatioList("3:2:1").invalid).toEqual(["3:2:1"]);
  });

  it("empty input is ladder mode", () => {
    expect(parseRatioList("")).toEqual({ valid: [], invalid: [] });
    expect(parseRatioList(" , ,")).toEqual({ valid: [], invalid: [] });
  });
});

describe("URL state round trip", () => {
  const cases: ExplorerState[] = [
    DEFAULT_STATE,
    { color: "#ff8800", mode: "paper", space: "encoded", levels: 1, ratios: [], compare: false },
    { color: "#0000ff", mode: "derived", space: "linear", levels: 3, ratios: ["3:2", "4:3"], compare: false },
    { color: "#123abc", mode: "derived", space: "encoded", levels: 2, ratios: ["5:4"], compare: true },
  ];

  it.each(cases.map((s) => [serializeState(s), s] as const))(
    "parse(serialize) is identity for ?%s",
    (_query, state) => {
      expect(parseState(serializeState(state))).toEqual(state);
    },
  );

  it("unknown query parameters are ignored", () => {
    const q = serializeState(DEFAULT_STATE) + "&utm_source=x";
    expect(parseState(q)).toEqual(DEFAULT_STATE);
  });

  it("invalid values fall back to defaults", () => {
    const state = parseState("color=zzz&mode=upsidedown&space=warp&levels=-3");
    expect(state).toEqual(DEFAULT_STATE);
  });

  it("invalid ratio tokens in the URL are dropped", () => {
    const state = parseState("color=%230000ff&ratios=3:2,9:0");
    expect(state.ratios).toEqual(["3:2"]);
  });
});
