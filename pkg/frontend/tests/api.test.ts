import { describe, expect, it } from 'vitest'
import { ApiClient, ApiError } from '../src/api'
import { emptyDatasetQuery } from '../src/query'

interface Recorded {
  url: string
  init?: RequestInit
}

function stubFetch(status: number, body: unknown) {
  const calls: Recorded[] = []
  const fetchImpl = async (url: string, init?: RequestInit) => {
    calls.push({ url, init })
    return new Response(JSON.stringify(body), {
      status,
      headers: { 'Content-Type': 'application/json' },
    })
  }
  return { calls, fetchImpl }
}

describe('ApiClient', () => {
  it('builds repeated facet params', async () => {
    const { calls, fetchImpl } = stubFetch(200, [])
    const api = new ApiClient('http://svc', fetchImpl)
    await api.searchDatasets({
      ...emptyDatasetQuery(),
      health: ['Heat Stress', 'Asthma'],
      cost: 'free',
      q: 'hemoragic',
    })
    expect(calls[0].url).toBe(
      'http://svc/api/datasets?health=Heat+Stress&health=Asthma&cost=free&q=hemoragic',
    )
  })

  it('omits the query string when there are no filters', async () => {
    const { calls, fetchImpl } = stubFetch(200, [])
    const api = new ApiClient('http://svc/', fetchImpl)
    await api.searchDatasets(emptyDatasetQuery())
    expect(calls[0].url).toBe('http://svc/api/datasets')
  })

  it('sends the bearer token only on admin calls', async () => {
    const { calls, fetchImpl } = stubFetch(200, [])
    const api = new ApiClient('http://svc', fetchImpl)
    api.adminToken = 'secret'
    await api.searchDatasets(emptyDatasetQuery())
    await api.adminListContributions('pending')
    const headersOf = (call: Recorded) =>
      (call.init?.headers ?? {}) as Record<string, string>
    expect(headersOf(calls[0])['Authorization']).toBeUndefined()
    expect(headersOf(calls[1])['Authorization']).toBe('Bearer secret')
    expect(calls[1].url).toBe('http://svc/api/admin/contributions?state=pending')
  })

  it('surfaces the service error body', async () => {
    const { fetchImpl } = stubFetch(400, {
      error: "invalid cost 'gratis'",
      details: [{ field: 'cost', message: 'accepted values: free, paid' }],
    })
    const api = new ApiClient('http://svc', fetchImpl)
    const failure = api.searchDatasets({ ...emptyDatasetQuery(), cost: 'free' })
    await expect(failure).rejects.toBeInstanceOf(ApiError)
    await failure.catch((error: ApiError) => {
      expect(error.status).toBe(400)
      expect(error.body.details[0].field).toBe('cost')
    })
  })

  it('serializes review notes as JSON bodies', async () => {
    const { calls, fetchImpl } = stubFetch(200, { id: 'x', state: 'approved' })
    const api = new ApiClient('http://svc', fetchImpl)
    api.adminToken = 'secret'
    await api.adminReview('x', 'approve', 'fine')
    expect(calls[0].url).toBe('http://svc/api/admin/contributions/x/approve')
    expect(JSON.parse(calls[0].init?.body as string)).toEqual({ note: 'fine' })
  })
})
