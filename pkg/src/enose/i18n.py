"""Locale bundles for dashboard strings.

Both locales carry the same key set; a test pins that so adding a key
to one bundle without the other fails fast instead of leaking English
into the Bengali UI.
"""

from __future__ import annotations

from .errors import EnoseError

SUPPORTED_LOCALES = ("en", "bn")
DEFAULT_LOCALE = "en"

_EN = {
    "app.title": "Fruit quality monitor",
    "category.excellent": "Excellent",
    "category.good": "Good",
    "category.moderate": "Moderate",
    "category.bad": "Bad",
    "category.rotten": "Rotten",
    "factor.methane": "Methane",
    "factor.ammonia": "Ammonia",
    "factor.ethanol": "Ethanol",
    "factor.temperature": "Temperature",
    "factor.humidity": "Humidity",
    "field.quality": "Quality index",
    "field.weight": "Batch weight",
    "field.active_sensors": "Active sensors",
    "field.updated": "Last updated",
    "field.batch": "Batch",
    "field.fruit": "Fruit",
    "unit.ppm": "ppm",
    "unit.ppm_per_kg": "ppm/kg",
    "unit.celsius": "°C",
    "unit.percent": "%",
    "unit.kg": "kg",
    "action.refresh": "Refresh",
    "action.toggle_locale": "বাংলা",
    "state.loading": "Loading…",
    "state.no_data": "No readings yet",
    "state.stale": "Showing last good data",
    "state.stable": "stable",
    "state.fetch_failed": "Could not reach the service",
    "signal.snr": "Signal-to-noise",
    "signal.noise": "Residual noise",
    "signal.rolling_std": "Rolling deviation",
    "signal.lag1": "Lag-1 autocorrelation",
    "signal.noiseless": "noiseless",
}

_BN = {
    "app.title": "ফলের মান পর্যবেক্ষক",
    "category.excellent": "চমৎকার",
    "category.good": "ভালো",
    "category.moderate": "মাঝারি",
    "category.bad": "খারাপ",
    "category.rotten": "পচা",
    "factor.methane": "মিথেন",
    "factor.ammonia": "অ্যামোনিয়া",
    "factor.ethanol": "ইথানল",
    "factor.temperature": "তাপমাত্রা",
    "factor.humidity": "আর্দ্রতা",
    "field.quality": "মান সূচক",
    "field.weight": "ব্যাচের ওজন",
    "field.active_sensors": "সক্রিয় সেন্সর",
    "field.updated": "সর্বশেষ হালনাগাদ",
    "field.batch": "ব্যাচ",
    "field.fruit": "ফল",
    "unit.ppm": "পিপিএম",
    "unit.ppm_per_kg": "পিপিএম/কেজি",
    "unit.celsius": "°সে.",
    "unit.percent": "%",
    "unit.kg": "কেজি",
    "action.refresh": "তথ্য রিফ্রেশ করুন",
    "action.toggle_locale": "English",
    "state.loading": "লোড হচ্ছে…",
    "state.no_data": "এখনও কোনও পাঠ নেই",
    "state.stale": "সর্বশেষ সঠিক তথ্য দেখানো হচ্ছে",
    "state.stable": "স্থিতিশীল",
    "state.fetch_failed": "সার্ভিসে পৌঁছানো যায়নি",
    "signal.snr": "সিগন্যাল-টু-নয়েজ",
    "signal.noise": "অবশিষ্ট নয়েজ",
    "signal.rolling_std": "চলমান বিচ্যুতি",
    "signal.lag1": "ল্যাগ-১ অটোকোরিলেশন",
    "signal.noiseless": "নয়েজমুক্ত",
}

_BUNDLES = {"en": _EN, "bn": _BN}


def bundle(locale: str) -> dict[str, str]:
    """Strings for one locale; raises on anything unsupported."""
    try:
        return dict(_BUNDLES[locale])
    except KeyError:
        raise EnoseError(f"unsupported locale {locale!r}; choose from {SUPPORTED_LOCALES}") from None


def category_key(category_value: str) -> str:
    return f"category.{category_value.lower()}"
