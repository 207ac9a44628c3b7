import { ApiClient } from './api'
import { installNav } from './nav'
import { renderRoute } from './router'

declare global {
  interface Window {
    GEOX_API_BASE?: string
  }
}

export function startApp(doc: Document = document): void {
  const apiBase = window.GEOX_API_BASE ?? ''
  const api = new ApiClient(apiBase)

  const navRoot = doc.getElementById('nav')
  const main = doc.getElementById('main')
  if (!navRoot || !main) throw new Error('missing #nav or #main container')

  installNav(navRoot)

  const navigate = (hash: string) => {
    if (window.location.hash === hash) {
      renderRoute(main, api, hash, navigate)
    } else {
      window.location.hash = hash
    }
  }
  window.addEventListener('hashchange', () =>
    renderRoute(main, api, window.location.hash, navigate),
  )
  renderRoute(main, api, window.location.hash || '#/search', navigate)
}

if (typeof document !== 'undefined' && document.getElementById('main')) {
  startApp()
}
