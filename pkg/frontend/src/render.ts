import { gasSeries, renderTrendSvg } from "./chart.js";
import type { AppState } from "./controller.js";
import { formatExact, formatNumber, formatUtc } from "./format.js";
import { categoryKey, translate } from "./i18n.js";
import type { StringBundle } from "./types.js";

// Gas order is fixed so the layout never reshuffles between refreshes.
const GAS_ORDER = ["ethanol", "methane", "ammonia"];

function esc(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function renderBanner(t: (key: string) => string, state: AppState): string {
  if (state.error === null) {
    return "";
  }
  const staleNote = state.loaded ? ` — ${esc(t("state.stale"))}` : "";
  return `<div class="banner error" role="alert">${esc(t(state.error))}${staleNote}</div>`;
}

function renderLatest(t: (key: string) => string, state: AppState): string {
  const latest = state.latest;
  if (latest === null) {
    return `<section class="card"><p class="empty">${esc(t("state.no_data"))}</p></section>`;
  }
  const reading = latest.reading;
  const category = esc(t(categoryKey(reading.quality.category)));

  const gasRows = GAS_ORDER.map((gas) => {
    const label = esc(t(`factor.${gas}`));
    const fault = reading.faulted[gas];
    if (fault !== undefined) {
      return (
        `<tr class="faulted"><th>${label}</th>` +
        `<td colspan="2" class="fault-reason">${esc(fault)}</td></tr>`
      );
    }
    const ppm = formatNumber(reading.ppm[gas]);
    const perKg = formatNumber(reading.ppm_per_kg[gas]);
    const clampMark = reading.clamped[gas] ? " *" : "";
    return (
      `<tr><th>${label}</th>` +
      `<td>${ppm} ${esc(t("unit.ppm"))}${clampMark}</td>` +
      `<td>${perKg} ${esc(t("unit.ppm_per_kg"))}</td></tr>`
    );
  }).join("");

  return `
<section class="card latest">
  <div class="quality">
    <span class="category category-${esc(reading.quality.category.toLowerCase())}">${category}</span>
    <span class="total">${esc(t("field.quality"))}: ${reading.quality.total.toFixed(3)}</span>
  </div>
  <table class="gases"><tbody>${gasRows}</tbody></table>
  <dl class="meta">
    <dt>${esc(t("field.batch"))}</dt><dd>${esc(reading.batch)}</dd>
    <dt>${esc(t("field.fruit"))}</dt><dd>${esc(latest.fruit)}</dd>
    <dt>${esc(t("field.weight"))}</dt><dd>${formatNumber(latest.weight_kg)} ${esc(t("unit.kg"))}</dd>
    <dt>${esc(t("field.active_sensors"))}</dt><dd>${latest.active_sensors}</dd>
    <dt>${esc(t("field.updated"))}</dt><dd>${formatUtc(reading.ts)}</dd>
  </dl>
</section>`;
}

function renderSelectedDetail(t: (key: string) => string, state: AppState): string {
  if (state.selected === null) {
    return "";
  }
  const series = gasSeries(state.trend, state.selected.gas);
  const point = series[state.selected.index];
  if (point === undefined) {
    return "";
  }
  return (
    `<p class="point-detail" data-role="point-detail">` +
    `${esc(t(`factor.${state.selected.gas}`))} · ${formatUtc(point.ts)} · ` +
    `<span class="exact-value">${formatExact(point.value)}</span> ${esc(t("unit.ppm"))}</p>`
  );
}

function renderTrends(t: (key: string) => string, state: AppState): string {
  if (state.trend.length === 0) {
    return "";
  }
  const sections = GAS_ORDER.map((gas) => {
    const series = gasSeries(state.trend, gas);
    const selected =
      state.selected !== null && state.selected.gas === gas
        ? state.selected.index
        : null;
    return (
      `<figure class="trend-block">` +
      `<figcaption>${esc(t(`factor.${gas}`))} (${esc(t("unit.ppm"))})</figcaption>` +
      renderTrendSvg(series, { gas, selected }) +
      `</figure>`
    );
  }).join("");
  return `<section class="card trends">${sections}${renderSelectedDetail(t, state)}</section>`;
}

export function render(state: AppState): string {
  const bundle: StringBundle | undefined = state.bundles[state.locale];
  const t = (key: string) => translate(bundle, key);

  const body = state.loaded
    ? renderLatest(t, state) + renderTrends(t, state)
    : `<p class="empty">${esc(t("state.loading"))}</p>`;

  return `
<header>
  <h1>${esc(t("app.title"))}</h1>
  <nav>
    <button type="button" data-action="refresh">${esc(t("action.refresh"))}</button>
    <button type="button" data-action="toggle-locale" lang="${state.locale === "en" ? "bn" : "en"}">${esc(t("action.toggle_locale"))}</button>
    <label class="auto"><input type="checkbox" data-action="auto"${state.autoRefresh ? " checked" : ""}> 60 s</label>
  </nav>
</header>
${renderBanner(t, state)}
${body}`;
}
