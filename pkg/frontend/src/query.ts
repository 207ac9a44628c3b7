// Search queries live in the URL so deep links reproduce a search exactly.

export interface DatasetQuery {
  health: string[]
  cost: '' | 'free' | 'paid'
  area: string[]
  provider: string[]
  providerCategory: string[]
  q: string
}

export interface PublicationQuery {
  health: string[]
  dataset: string
}

export function emptyDatasetQuery(): DatasetQuery {
  return { health: [], cost: '', area: [], provider: [], providerCategory: [], q: '' }
}

export function emptyPublicationQuery(): PublicationQuery {
  return { health: [], dataset: '' }
}

export function datasetQueryToParams(query: DatasetQuery): URLSearchParams {
  const params = new URLSearchParams()
  for (const value of query.health) params.append('health', value)
  if (query.cost) params.set('cost', query.cost)
  for (const value of query.area) params.append('area', value)
  for (const value of query.provider) params.append('provider', value)
  for (const value of query.providerCategory) {
    params.append('provider_category', value)
  }
  if (query.q) params.set('q', query.q)
  return params
}

export function datasetQueryFromParams(params: URLSearchParams): DatasetQuery {
  const cost = params.get('cost')
  return {
    health: params.getAll('health'),
    cost: cost === 'free' || cost === 'paid' ? cost : '',
    area: params.getAll('area'),
    provider: params.getAll('provider'),
    providerCategory: params.getAll('provider_category'),
    q: params.get('q') ?? '',
  }
}

export function publicationQueryToParams(query: PublicationQuery): URLSearchParams {
  const params = new URLSearchParams()
  for (const value of query.health) params.append('health', value)
  if (query.dataset) params.set('dataset', query.dataset)
  return params
}

export function publicationQueryFromParams(params: URLSearchParams): PublicationQuery {
  return {
    health: params.getAll('health'),
    dataset: params.get('dataset') ?? '',
  }
}

export function isEmptyDatasetQuery(query: DatasetQuery): boolean {
  return datasetQueryToParams(query).toString() === ''
}
