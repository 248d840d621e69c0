import { describe, expect, it } from "vitest";

import { formatExact, formatNumber, formatUtc } from "../src/format.js";
import { HISTORY } from "./fixtures.js";

describe("formatNumber", () => {
  it("scales decimal places with magnitude", () => {
    expect(formatNumber(758.1431443839326)).toBe("758.1");
    expect(formatNumber(42.18277954341564)).toBe("42.18");
    expect(formatNumber(0.3995675902417682)).toBe("0.400");
  });

  it("uses ASCII digits only", () => {
    expect(formatNumber(107.19133401946432)).toMatch(/^[0-9.]+$/);
  });

  it("renders non-finite values as empty", () => {
    expect(formatNumber(Number.NaN)).toBe("");
    expect(formatNumber(Number.POSITIVE_INFINITY)).toBe("");
  });
});

describe("formatExact", () => {
  it("round-trips stored values without loss", () => {
    const stored = HISTORY.points[3].ppm["methane"];
    expect(formatExact(stored)).toBe("589.480939535806");
    expect(Number(formatExact(stored))).toBe(stored);
  });
});

describe("formatUtc", () => {
  it("renders epoch seconds as a fixed UTC layout", () => {
    expect(formatUtc(1755143940)).toBe("2025-08-14 03:59:00 UTC");
    expect(formatUtc(0)).toBe("1970-01-01 00:00:00 UTC");
  });
});
