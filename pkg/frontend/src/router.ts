import { ApiClient } from './api'
import { renderAdminView } from './views/admin'
import { renderContributeView } from './views/contribute'
import { renderDatasetDetail, renderPublicationDetail } from './views/detail'
import { renderMapView } from './views/map'
import { renderSearchView } from './views/search'

export interface Route {
  view: 'search' | 'map' | 'dataset' | 'publication' | 'contribute' | 'admin'
  id?: string
  params: URLSearchParams
}

export function parseHash(hash: string): Route {
  const stripped = hash.replace(/^#\/?/, '')
  const [pathPart, queryPart] = stripped.split('?', 2)
  const params = new URLSearchParams(queryPart ?? '')
  const segments = pathPart.split('/').filter(Boolean)

  if (segments[0] === 'map') return { view: 'map', params }
  if (segments[0] === 'contribute') return { view: 'contribute', params }
  if (segments[0] === 'admin') return { view: 'admin', params }
  if (segments[0] === 'datasets' && segments[1]) {
    return { view: 'dataset', id: decodeURIComponent(segments[1]), params }
  }
  if (segments[0] === 'publications' && segments[1]) {
    return { view: 'publication', id: decodeURIComponent(segments[1]), params }
  }
  return { view: 'search', params }
}

export function renderRoute(
  root: HTMLElement,
  api: ApiClient,
  hash: string,
  navigate: (hash: string) => void,
): Route {
  const route = parseHash(hash)
  switch (route.view) {
    case 'map':
      renderMapView(root, api, navigate)
      break
    case 'dataset':
      renderDatasetDetail(root, api, route.id!)
      break
    case 'publication':
      renderPublicationDetail(root, api, route.id!)
      break
    case 'contribute':
      renderContributeView(root, api)
      break
    case 'admin':
      renderAdminView(root, api)
      break
    default:
      renderSearchView(root, api, route.params, navigate)
  }
  return route
}
