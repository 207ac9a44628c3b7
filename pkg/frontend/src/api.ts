import type {
  Contribution,
  Dataset,
  ErrorBody,
  Hotspot,
  Publication,
  StatsTable,
} from './types'
import type { DatasetQuery, PublicationQuery } from './query'
import { datasetQueryToParams, publicationQueryToParams } from './query'

export class ApiError extends Error {
  status: number
  body: ErrorBody

  constructor(status: number, body: ErrorBody) {
    super(body.error)
    this.status = status
    this.body = body
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>

export class ApiClient {
  baseUrl: string
  adminToken: string | null = null
  private fetchImpl: FetchLike

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, '')
    // bind so the implementation survives being passed around detached
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init))
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    admin = false,
  ): Promise<T> {
    const headers: Record<string, string> = {}
    if (body !== undefined) headers['Content-Type'] = 'application/json'
    if (admin && this.adminToken) {
      headers['Authorization'] = `Bearer ${this.adminToken}`
    }
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    })
    if (!response.ok) {
      let parsed: ErrorBody
      try {
        parsed = (await response.json()) as ErrorBody
      } catch {
        parsed = { error: `HTTP ${response.status}`, details: [] }
      }
      throw new ApiError(response.status, parsed)
    }
    return (await response.json()) as T
  }

  searchDatasets(query: DatasetQuery): Promise<Dataset[]> {
    const params = datasetQueryToParams(query).toString()
    return this.request('GET', `/api/datasets${params ? `?${params}` : ''}`)
  }

  getDataset(id: string): Promise<Dataset> {
    return this.request('GET', `/api/datasets/${encodeURIComponent(id)}`)
  }

  searchPublications(query: PublicationQuery): Promise<Publication[]> {
    const params = publicationQueryToParams(query).toString()
    return this.request('GET', `/api/publications${params ? `?${params}` : ''}`)
  }

  getPublication(id: string): Promise<Publication> {
    return this.request('GET', `/api/publications/${encodeURIComponent(id)}`)
  }

  getStats(table: string): Promise<StatsTable> {
    return this.request('GET', `/api/stats/${encodeURIComponent(table)}`)
  }

  getHotspots(): Promise<Hotspot[]> {
    return this.request('GET', '/api/hotspots')
  }

  submitContribution(
    kind: 'dataset' | 'publication',
    payload: Record<string, unknown>,
    submitter?: string,
  ): Promise<{ id: string; state: string }> {
    return this.request('POST', '/api/contributions', { kind, payload, submitter })
  }

  // -- admin; all of these require adminToken to be set --------------------

  adminUpsertDataset(payload: Record<string, unknown>, id?: string) {
    return id
      ? this.request<{ id: string }>(
          'PUT', `/api/admin/datasets/${encodeURIComponent(id)}`, payload, true)
      : this.request<{ id: string }>('POST', '/api/admin/datasets', payload, true)
  }

  adminUpsertPublication(payload: Record<string, unknown>, id?: string) {
    return id
      ? this.request<{ id: string }>(
          'PUT', `/api/admin/publications/${encodeURIComponent(id)}`, payload, true)
      : this.request<{ id: string }>('POST', '/api/admin/publications', payload, true)
  }

  adminDelete(kind: 'datasets' | 'publications', id: string, force: boolean) {
    const suffix = force ? '?force=true' : ''
    return this.request<{ deleted: string }>(
      'DELETE', `/api/admin/${kind}/${encodeURIComponent(id)}${suffix}`,
      undefined, true)
  }

  adminListContributions(state?: string): Promise<Contribution[]> {
    const suffix = state ? `?state=${encodeURIComponent(state)}` : ''
    return this.request('GET', `/api/admin/contributions${suffix}`, undefined, true)
  }

  adminReview(id: string, verdict: 'approve' | 'reject', note?: string) {
    return this.request<{ id: string; state: string }>(
      'POST',
      `/api/admin/contributions/${encodeURIComponent(id)}/${verdict}`,
      { note: note ?? null },
      true,
    )
  }
}
