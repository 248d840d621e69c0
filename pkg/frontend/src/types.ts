// Wire types for the readings service. Field names mirror the JSON
// payloads exactly; gas maps omit channels that were faulted for a reading.

export type Locale = "en" | "bn";

export type StringBundle = Record<string, string>;

export interface QualityScore {
  factors: Record<string, number>;
  total: number;
  category: string;
  ts: number;
}

export interface Reading {
  batch: string;
  ts: number;
  ppm: Record<string, number>;
  ppm_per_kg: Record<string, number>;
  clamped: Record<string, boolean>;
  faulted: Record<string, string>;
  quality: QualityScore;
}

export interface LatestResponse {
  reading: Reading;
  active_sensors: number;
  weight_kg: number;
  fruit: string;
}

export interface HistoryResponse {
  batch_id: string;
  count: number;
  points: Reading[];
}

export interface BatchSummary {
  batch_id: string;
  fruit: string;
  weight_kg: number;
  started_at: number;
  quality_config_id: string;
  calibration_id: string;
}
