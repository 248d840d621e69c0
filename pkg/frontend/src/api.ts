import type {
  BatchSummary,
  HistoryResponse,
  LatestResponse,
  Locale,
  StringBundle,
} from "./types.js";

// Narrow view of fetch so tests can inject a fake without faking
// the whole Response surface.
export interface ResponseLike {
  status: number;
  ok: boolean;
  json(): Promise<unknown>;
}

export type FetchLike = (path: string) => Promise<ResponseLike>;

export class ApiError extends Error {
  constructor(readonly status: number, readonly path: string) {
    super(`request failed with ${status}: ${path}`);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly baseUrl: string = "",
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path);
    if (!response.ok) {
      throw new ApiError(response.status, path);
    }
    return (await response.json()) as T;
  }

  async batches(): Promise<BatchSummary[]> {
    const body = await this.get<{ batches: BatchSummary[] }>("/batches");
    return body.batches;
  }

  /** Newest derived reading, or null while the batch has no data (204). */
  async latest(batchId: string): Promise<LatestResponse | null> {
    const path = `/batches/${encodeURIComponent(batchId)}/latest`;
    const response = await this.fetchImpl(this.baseUrl + path);
    if (response.status === 204) {
      return null;
    }
    if (!response.ok) {
      throw new ApiError(response.status, path);
    }
    return (await response.json()) as LatestResponse;
  }

  async history(batchId: string, maxPoints = 240): Promise<HistoryResponse> {
    const id = encodeURIComponent(batchId);
    return this.get<HistoryResponse>(
      `/batches/${id}/history?max_points=${maxPoints}`,
    );
  }

  async stringBundle(locale: Locale): Promise<StringBundle> {
    const body = await this.get<{ locale: string; strings: StringBundle }>(
      `/i18n/${locale}`,
    );
    return body.strings;
  }
}
