import { ApiClient, ApiError } from '../api'
import type { Dataset, Publication, Resolution } from '../types'

export function formatResolution(res: Resolution): string {
  if (res.kind === 'scale') return `1:${res.denominator}`
  if (res.kind === 'unspecified') return 'Unspecified'
  const min = res.min_meters ?? 0
  const fmt = (meters: number) =>
    meters >= 1000 && meters % 1000 === 0 ? `${meters / 1000}km` : `${meters}m`
  let text: string
  if (res.max_meters == null) text = `>${fmt(min)}`
  else if (res.max_meters === min) text = fmt(min)
  else text = `${fmt(min)}–${fmt(res.max_meters)}`
  return res.band ? `${text} (${res.band})` : text
}

function row(label: string, value: string | HTMLElement): HTMLTableRowElement {
  const tr = document.createElement('tr')
  const th = document.createElement('th')
  th.textContent = label
  const td = document.createElement('td')
  if (typeof value === 'string') td.textContent = value
  else td.appendChild(value)
  tr.append(th, td)
  return tr
}

function linkList(items: { href: string; text: string }[]): HTMLElement {
  const ul = document.createElement('ul')
  ul.className = 'link-list'
  for (const item of items) {
    const li = document.createElement('li')
    const a = document.createElement('a')
    a.href = item.href
    a.textContent = item.text
    li.appendChild(a)
    ul.appendChild(li)
  }
  return ul
}

function notFound(root: HTMLElement, what: string): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = 'Not found'
  const message = document.createElement('p')
  message.textContent = `There is no ${what} at this address. It may have been removed.`
  const back = document.createElement('a')
  back.href = '#/search'
  back.textContent = 'Back to search'
  root.append(heading, message, back)
}

function renderDataset(root: HTMLElement, ds: Dataset): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = ds.name
  root.appendChild(heading)

  const table = document.createElement('table')
  table.className = 'detail'
  table.appendChild(
    row('Providers', ds.providers
      .map((p) => `${p.name} (${p.category}, ${p.region})`)
      .join('; ')),
  )
  table.appendChild(row('First available', ds.first_available_year?.toString() ?? 'Unknown'))
  table.appendChild(row('Update frequency', ds.update_frequency))
  table.appendChild(
    row('Still updated as of', ds.still_updated_as_of?.toString() ?? 'Unknown'),
  )
  table.appendChild(
    row('Cost', ds.cost.access + (ds.cost.notes ? ` — ${ds.cost.notes}` : '')),
  )
  table.appendChild(
    row('Coverage', `${ds.coverage.region}: ${ds.coverage.areas.join('; ')}`),
  )
  table.appendChild(
    row('Resolutions',
      ds.resolutions.length
        ? ds.resolutions.map(formatResolution).join('; ')
        : 'Not available'),
  )
  if (ds.url) {
    const a = document.createElement('a')
    a.href = ds.url
    a.textContent = ds.url
    table.appendChild(row('URL', a))
  }
  table.appendChild(row('Health applications', ds.health_applications.join('; ') || '—'))
  table.appendChild(
    row('Publications',
      linkList(ds.publications.map((p) => ({
        href: `#/publications/${p.id}`,
        text: `${p.title} (${p.year})`,
      })))),
  )
  root.appendChild(table)
}

function renderPublication(root: HTMLElement, pub: Publication): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = `${pub.title} (${pub.year})`
  root.appendChild(heading)

  const table = document.createElement('table')
  table.className = 'detail'
  table.appendChild(row('Journal', `${pub.journal} (${pub.journal_category})`))
  table.appendChild(row('Study theme', pub.study_theme))
  table.appendChild(row('Study topics', pub.study_topics.join('; ') || '—'))
  table.appendChild(row('Study areas', pub.study_areas.join('; ') || '—'))
  if (pub.link) {
    const a = document.createElement('a')
    a.href = pub.link
    a.textContent = pub.link
    table.appendChild(row('Link', a))
  }
  table.appendChild(row('Health applications', pub.health_applications.join('; ') || '—'))
  table.appendChild(
    row('Datasets',
      linkList(pub.datasets.map((d) => ({
        href: `#/datasets/${d.id}`,
        text: d.name,
      })))),
  )
  root.appendChild(table)
}

export function renderDatasetDetail(root: HTMLElement, api: ApiClient, id: string): void {
  root.textContent = 'Loading…'
  api.getDataset(id).then(
    (ds) => renderDataset(root, ds),
    (error) => {
      if (error instanceof ApiError && error.status === 404) notFound(root, 'dataset')
      else root.textContent = `Failed to load dataset: ${String(error)}`
    },
  )
}

export function renderPublicationDetail(
  root: HTMLElement,
  api: ApiClient,
  id: string,
): void {
  root.textContent = 'Loading…'
  api.getPublication(id).then(
    (pub) => renderPublication(root, pub),
    (error) => {
      if (error instanceof ApiError && error.status === 404) {
        notFound(root, 'publication')
      } else root.textContent = `Failed to load publication: ${String(error)}`
    },
  )
}
