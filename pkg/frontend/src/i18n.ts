import type { Locale, StringBundle } from "./types.js";

export const SUPPORTED_LOCALES: Locale[] = ["en", "bn"];

export function otherLocale(locale: Locale): Locale {
  return locale === "en" ? "bn" : "en";
}

export function parseLocale(value: string | null): Locale | null {
  return value === "en" || value === "bn" ? value : null;
}

/** Bundle key for a category value as sent by the API ("Good" etc). */
export function categoryKey(category: string): string {
  return `category.${category.toLowerCase()}`;
}

// Missing keys render as the key itself: ugly but debuggable, and it
// keeps the dashboard working if the service ships a newer bundle.
export function translate(bundle: StringBundle | undefined, key: string): string {
  return bundle?.[key] ?? key;
}
