// Number and time formatting. Always ASCII digits and fixed layouts,
// independent of the active locale, so switching the UI language never
// changes numeric content.

export function formatNumber(value: number): string {
  if (!Number.isFinite(value)) {
    return "";
  }
  const abs = Math.abs(value);
  if (abs >= 100) {
    return value.toFixed(1);
  }
  if (abs >= 1) {
    return value.toFixed(2);
  }
  return value.toFixed(3);
}

/** Full-precision rendering for the click-to-inspect readout. */
export function formatExact(value: number): string {
  return String(value);
}

export function formatUtc(epochSeconds: number): string {
  const iso = new Date(epochSeconds * 1000).toISOString();
  return `${iso.slice(0, 10)} ${iso.slice(11, 19)} UTC`;
}
