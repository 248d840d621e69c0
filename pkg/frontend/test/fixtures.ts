// Recorded responses from a live service run: a banana batch partway
// through ripening, captured via the HTTP API. Tests run against these
// instead of a live backend.

import type { BatchSummary, HistoryResponse, LatestResponse, StringBundle } from "../src/types.js";

export const LATEST: LatestResponse = {
  "reading": {
    "batch": "banana-20250812",
    "ts": 1755143940,
    "ppm": {
      "ethanol": 428.7653360778573,
      "methane": 758.1431443839326,
      "ammonia": 42.18277954341564
    },
    "ppm_per_kg": {
      "ethanol": 107.19133401946432,
      "methane": 189.53578609598316,
      "ammonia": 10.54569488585391
    },
    "clamped": {
      "ethanol": false,
      "methane": false,
      "ammonia": false
    },
    "faulted": {},
    "quality": {
      "factors": {
        "methane": 0.0,
        "ethanol": 0.09715404066559186,
        "ammonia": 0.9999830281290135,
        "temperature": 0.0,
        "humidity": 0.6
      },
      "total": 0.3995675902417682,
      "category": "Bad",
      "ts": 1755143940
    }
  },
  "active_sensors": 4,
  "weight_kg": 4.0,
  "fruit": "banana"
};

export const HISTORY: HistoryResponse = {
  "batch_id": "banana-20250812",
  "count": 12,
  "points": [
    {
      "batch": "banana-20250812",
      "ts": 1755120000,
      "ppm": {
        "ethanol": 331.83169153144433,
        "methane": 523.5461787405097,
        "ammonia": 34.729099639906615
      },
      "ppm_per_kg": {
        "ethanol": 82.95792288286108,
        "methane": 130.88654468512743,
        "ammonia": 8.682274909976654
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.8354250781905552,
          "ethanol": 0.9723252042160249,
          "ammonia": 0.9999931500607668,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.7814740778593194,
        "category": "Good",
        "ts": 1755120000
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755122220,
      "ppm": {
        "ethanol": 344.3602329202325,
        "methane": 544.7645901676694,
        "ammonia": 35.085379319534084
      },
      "ppm_per_kg": {
        "ethanol": 86.09005823005812,
        "methane": 136.19114754191736,
        "ammonia": 8.771344829883521
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.7913040716821959,
          "ethanol": 0.9541907833009383,
          "ammonia": 0.9999928159147599,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.7655175041720965,
        "category": "Good",
        "ts": 1755122220
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755124440,
      "ppm": {
        "ethanol": 356.213247973297,
        "methane": 566.8178472388144,
        "ammonia": 35.487883761928465
      },
      "ppm_per_kg": {
        "ethanol": 89.05331199332424,
        "methane": 141.7044618097036,
        "ammonia": 8.871970940482116
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.7354246825719257,
          "ethanol": 0.927421176163242,
          "ammonia": 0.9999924231492249,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.7447381187195621,
        "category": "Good",
        "ts": 1755124440
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755126660,
      "ppm": {
        "ethanol": 367.3440403519814,
        "methane": 589.480939535806,
        "ammonia": 35.94253063005054
      },
      "ppm_per_kg": {
        "ethanol": 91.83601008799535,
        "methane": 147.3702348839515,
        "ammonia": 8.985632657512635
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.6655441395703383,
          "ethanol": 0.8897128945949058,
          "ammonia": 0.9999919594187364,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.7181175628714267,
        "category": "Good",
        "ts": 1755126660
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755128880,
      "ppm": {
        "ethanol": 377.7238272786202,
        "methane": 612.5015621094738,
        "ammonia": 36.455973081298794
      },
      "ppm_per_kg": {
        "ethanol": 94.43095681965505,
        "methane": 153.12539052736844,
        "ammonia": 9.113993270324698
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.5794634030767465,
          "ethanol": 0.8389041007190422,
          "ammonia": 0.9999914092121764,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.6846718440248376,
        "category": "Good",
        "ts": 1755128880
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755131100,
      "ppm": {
        "ethanol": 387.3403930596506,
        "methane": 635.6108868052072,
        "ammonia": 37.03568505600948
      },
      "ppm_per_kg": {
        "ethanol": 96.83509826491265,
        "methane": 158.9027217013018,
        "ammonia": 9.25892126400237
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.4752397874920723,
          "ethanol": 0.7732446059956871,
          "ammonia": 0.9999907528891478,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.6435556218359479,
        "category": "Good",
        "ts": 1755131100
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755133320,
      "ppm": {
        "ethanol": 396.19620337616044,
        "methane": 658.5359265043776,
        "ammonia": 37.69005474045432
      },
      "ppm_per_kg": {
        "ethanol": 99.04905084404011,
        "methane": 164.6339816260944,
        "ammonia": 9.42251368511358
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.3514295452734928,
          "ethanol": 0.6916382927989579,
          "ammonia": 0.9999899653807275,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.594171346250628,
        "category": "Moderate",
        "ts": 1755133320
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755135540,
      "ppm": {
        "ethanol": 404.3061927164834,
        "methane": 681.012308109714,
        "ammonia": 38.42848648782047
      },
      "ppm_per_kg": {
        "ethanol": 101.07654817912085,
        "methane": 170.2530770274285,
        "ammonia": 9.607121621955118
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.20732521672994908,
          "ethanol": 0.593811409709403,
          "ammonia": 0.9999890144245005,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.5362657061633578,
        "category": "Moderate",
        "ts": 1755135540
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755137760,
      "ppm": {
        "ethanol": 411.6954182160698,
        "methane": 702.7962023965903,
        "ammonia": 39.26151132083687
      },
      "ppm_per_kg": {
        "ethanol": 102.92385455401745,
        "methane": 175.69905059914757,
        "ammonia": 9.815377830209217
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.043144976568397775,
          "ethanol": 0.48037739284142233,
          "ammonia": 0.999987858148899,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.4699961557951249,
        "category": "Moderate",
        "ts": 1755137760
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755139980,
      "ppm": {
        "ethanol": 418.39673993133107,
        "methane": 723.6742978082093,
        "ammonia": 40.20090591383888
      },
      "ppm_per_kg": {
        "ethanol": 104.59918498283277,
        "methane": 180.91857445205233,
        "ammonia": 10.05022647845972
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.0,
          "ethanol": 0.352792259357256,
          "ammonia": 0.9999864417421048,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.43791443246977246,
        "category": "Moderate",
        "ts": 1755139980
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755142200,
      "ppm": {
        "ethanol": 424.44864787539876,
        "methane": 743.4710167022067,
        "ammonia": 41.25981964297846
      },
      "ppm_per_kg": {
        "ethanol": 106.11216196884969,
        "methane": 185.86775417555168,
        "ammonia": 10.314954910744614
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.0,
          "ethanol": 0.21321656440184067,
          "ammonia": 0.999984692824343,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.41697750982818754,
        "category": "Moderate",
        "ts": 1755142200
      }
    },
    {
      "batch": "banana-20250812",
      "ts": 1755143940,
      "ppm": {
        "ethanol": 428.7653360778573,
        "methane": 758.1431443839326,
        "ammonia": 42.18277954341564
      },
      "ppm_per_kg": {
        "ethanol": 107.19133401946432,
        "methane": 189.53578609598316,
        "ammonia": 10.54569488585391
      },
      "clamped": {
        "ethanol": false,
        "methane": false,
        "ammonia": false
      },
      "faulted": {},
      "quality": {
        "factors": {
          "methane": 0.0,
          "ethanol": 0.09715404066559186,
          "ammonia": 0.9999830281290135,
          "temperature": 0.0,
          "humidity": 0.6
        },
        "total": 0.3995675902417682,
        "category": "Bad",
        "ts": 1755143940
      }
    }
  ]
};

export const BUNDLE_EN: StringBundle = {
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
  "signal.noiseless": "noiseless"
};

export const BUNDLE_BN: StringBundle = {
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
  "signal.noiseless": "নয়েজমুক্ত"
};

export const BATCHES: BatchSummary[] = [
  {
    "batch_id": "banana-20250812",
    "fruit": "banana",
    "weight_kg": 4.0,
    "started_at": 1755000000,
    "quality_config_id": "banana",
    "calibration_id": "default"
  }
];
