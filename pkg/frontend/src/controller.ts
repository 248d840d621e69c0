import type { ApiClient } from "./api.js";
import { gasSeries } from "./chart.js";
import { otherLocale } from "./i18n.js";
import type { LatestResponse, Locale, Reading, StringBundle } from "./types.js";

export interface SelectedPoint {
  gas: string;
  index: number;
}

export interface AppState {
  batchId: string;
  locale: Locale;
  bundles: Partial<Record<Locale, StringBundle>>;
  latest: LatestResponse | null;
  trend: Reading[];
  selected: SelectedPoint | null;
  /** Bundle key of the banner message, or null when healthy. */
  error: string | null;
  /** True once at least one refresh has succeeded. */
  loaded: boolean;
  autoRefresh: boolean;
}

/**
 * Holds dashboard state and the refresh flow. State is replaced, never
 * mutated, so a render pass can cheaply compare references. A failed
 * refresh keeps the previous data and only raises the error banner;
 * overlapping refresh calls share the in-flight request.
 */
export class DashboardController {
  state: AppState;
  private inflight: Promise<void> | null = null;

  constructor(
    private readonly client: ApiClient,
    batchId: string,
    locale: Locale = "en",
  ) {
    this.state = {
      batchId,
      locale,
      bundles: {},
      latest: null,
      trend: [],
      selected: null,
      error: null,
      loaded: false,
      autoRefresh: false,
    };
  }

  refresh(): Promise<void> {
    if (!this.inflight) {
      this.inflight = this.doRefresh().finally(() => {
        this.inflight = null;
      });
    }
    return this.inflight;
  }

  private async doRefresh(): Promise<void> {
    try {
      const locale = this.state.locale;
      const [bundle, latest, history] = await Promise.all([
        this.state.bundles[locale] ?? this.client.stringBundle(locale),
        this.client.latest(this.state.batchId),
        this.client.history(this.state.batchId),
      ]);
      this.state = {
        ...this.state,
        bundles: { ...this.state.bundles, [locale]: bundle },
        latest,
        trend: history.points,
        selected: validSelection(this.state.selected, history.points),
        error: null,
        loaded: true,
      };
    } catch {
      this.state = { ...this.state, error: "state.fetch_failed" };
    }
  }

  async toggleLocale(): Promise<void> {
    const next = otherLocale(this.state.locale);
    if (!this.state.bundles[next]) {
      let bundle: StringBundle;
      try {
        bundle = await this.client.stringBundle(next);
      } catch {
        this.state = { ...this.state, error: "state.fetch_failed" };
        return;
      }
      this.state = {
        ...this.state,
        bundles: { ...this.state.bundles, [next]: bundle },
      };
    }
    this.state = { ...this.state, locale: next };
  }

  selectPoint(gas: string, index: number): void {
    const series = gasSeries(this.state.trend, gas);
    if (index < 0 || index >= series.length) {
      return;
    }
    this.state = { ...this.state, selected: { gas, index } };
  }

  clearSelection(): void {
    this.state = { ...this.state, selected: null };
  }

  setAutoRefresh(enabled: boolean): void {
    this.state = { ...this.state, autoRefresh: enabled };
  }
}

function validSelection(
  selected: SelectedPoint | null,
  trend: Reading[],
): SelectedPoint | null {
  if (selected === null) {
    return null;
  }
  return selected.index < gasSeries(trend, selected.gas).length ? selected : null;
}
