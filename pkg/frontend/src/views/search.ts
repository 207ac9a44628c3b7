import { ApiClient } from '../api'
import { SequenceGate } from '../seq'
import type { Dataset, Publication } from '../types'
import type { DatasetQuery, PublicationQuery } from '../query'
import {
  datasetQueryFromParams,
  datasetQueryToParams,
  emptyPublicationQuery,
  publicationQueryFromParams,
  publicationQueryToParams,
} from '../query'

export type SearchTab = 'datasets' | 'publications'

function textInput(
  label: string,
  value: string,
  onChange: (value: string) => void,
): HTMLLabelElement {
  const wrapper = document.createElement('label')
  wrapper.textContent = label
  const input = document.createElement('input')
  input.type = 'text'
  input.value = value
  input.addEventListener('change', () => onChange(input.value))
  wrapper.appendChild(input)
  return wrapper
}

function select(
  label: string,
  options: [string, string][],
  value: string,
  onChange: (value: string) => void,
): HTMLLabelElement {
  const wrapper = document.createElement('label')
  wrapper.textContent = label
  const el = document.createElement('select')
  for (const [optionValue, optionLabel] of options) {
    const option = document.createElement('option')
    option.value = optionValue
    option.textContent = optionLabel
    el.appendChild(option)
  }
  el.value = value
  el.addEventListener('change', () => onChange(el.value))
  wrapper.appendChild(el)
  return wrapper
}

function datasetResult(ds: Dataset): HTMLElement {
  const item = document.createElement('li')
  item.className = 'result'
  const title = document.createElement('a')
  title.href = `#/datasets/${ds.id}`
  title.textContent = ds.name
  item.appendChild(title)

  const meta = document.createElement('div')
  meta.className = 'result-meta'
  const providers = ds.providers.map((p) => p.name).join(', ')
  const badge = document.createElement('span')
  badge.className = `badge badge-${ds.cost.access}`
  badge.textContent = ds.cost.access === 'free' ? 'Free' : 'Paid'
  meta.append(
    providers,
    ' · ',
    badge,
    ' · ',
    ds.coverage.areas.join('; '),
  )
  item.appendChild(meta)
  return item
}

function publicationResult(pub: Publication): HTMLElement {
  const item = document.createElement('li')
  item.className = 'result'
  const title = document.createElement('a')
  title.href = `#/publications/${pub.id}`
  title.textContent = `${pub.title} (${pub.year})`
  item.appendChild(title)
  const meta = document.createElement('div')
  meta.className = 'result-meta'
  meta.textContent = pub.datasets.map((d) => d.name).join(', ')
  item.appendChild(meta)
  return item
}

export function renderSearchView(
  root: HTMLElement,
  api: ApiClient,
  params: URLSearchParams,
  navigate: (hash: string) => void,
): void {
  const tab: SearchTab = params.get('tab') === 'publications' ? 'publications' : 'datasets'
  const datasetQuery = datasetQueryFromParams(params)
  const publicationQuery = publicationQueryFromParams(params)
  const gate = new SequenceGate()

  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = 'Catalogue search'
  root.appendChild(heading)

  const tabs = document.createElement('div')
  tabs.className = 'tabs'
  for (const name of ['datasets', 'publications'] as const) {
    const button = document.createElement('button')
    button.textContent = name === 'datasets' ? 'Datasets' : 'Publications'
    button.className = name === tab ? 'tab active' : 'tab'
    button.addEventListener('click', () => {
      const next = new URLSearchParams()
      if (name === 'publications') next.set('tab', 'publications')
      navigate(`#/search?${next.toString()}`)
    })
    tabs.appendChild(button)
  }
  root.appendChild(tabs)

  const form = document.createElement('form')
  form.className = 'facets'
  form.addEventListener('submit', (event) => event.preventDefault())
  root.appendChild(form)

  const countLabel = document.createElement('p')
  countLabel.className = 'result-count'
  root.appendChild(countLabel)

  const list = document.createElement('ul')
  list.className = 'results'
  root.appendChild(list)

  const applyDatasetQuery = (query: DatasetQuery) => {
    const next = datasetQueryToParams(query)
    navigate(`#/search?${next.toString()}`)
  }
  const applyPublicationQuery = (query: PublicationQuery) => {
    const next = publicationQueryToParams(query)
    next.set('tab', 'publications')
    navigate(`#/search?${next.toString()}`)
  }

  if (tab === 'datasets') {
    form.appendChild(
      textInput('Free text', datasetQuery.q, (q) =>
        applyDatasetQuery({ ...datasetQuery, q })),
    )
    form.appendChild(
      textInput('Health application', datasetQuery.health.join('; '), (raw) =>
        applyDatasetQuery({
          ...datasetQuery,
          health: raw ? raw.split(';').map((s) => s.trim()).filter(Boolean) : [],
        })),
    )
    form.appendChild(
      select(
        'Cost',
        [['', 'Any'], ['free', 'Free'], ['paid', 'Paid']],
        datasetQuery.cost,
        (cost) =>
          applyDatasetQuery({ ...datasetQuery, cost: cost as DatasetQuery['cost'] }),
      ),
    )
    form.appendChild(
      textInput('Area', datasetQuery.area.join('; '), (raw) =>
        applyDatasetQuery({
          ...datasetQuery,
          area: raw ? raw.split(';').map((s) => s.trim()).filter(Boolean) : [],
        })),
    )
    form.appendChild(
      textInput('Provider', datasetQuery.provider.join('; '), (raw) =>
        applyDatasetQuery({
          ...datasetQuery,
          provider: raw ? raw.split(';').map((s) => s.trim()).filter(Boolean) : [],
        })),
    )
    form.appendChild(
      select(
        'Provider category',
        [
          ['', 'Any'],
          ['government', 'Government agency'],
          ['commercial', 'Commercial company'],
          ['academic', 'Academic institute'],
        ],
        datasetQuery.providerCategory[0] ?? '',
        (category) =>
          applyDatasetQuery({
            ...datasetQuery,
            providerCategory: category ? [category] : [],
          }),
      ),
    )

    const ticket = gate.issue()
    api.searchDatasets(datasetQuery).then(
      (results) => {
        if (!gate.isCurrent(ticket)) return
        countLabel.textContent = `${results.length} result${results.length === 1 ? '' : 's'}`
        list.innerHTML = ''
        for (const ds of results) list.appendChild(datasetResult(ds))
      },
      (error) => {
        if (!gate.isCurrent(ticket)) return
        countLabel.textContent = `Search failed: ${String(error)}`
      },
    )
  } else {
    form.appendChild(
      textInput('Health application', publicationQuery.health.join('; '), (raw) =>
        applyPublicationQuery({
          ...emptyPublicationQuery(),
          dataset: publicationQuery.dataset,
          health: raw ? raw.split(';').map((s) => s.trim()).filter(Boolean) : [],
        })),
    )
    form.appendChild(
      textInput('Dataset name', publicationQuery.dataset, (dataset) =>
        applyPublicationQuery({ ...publicationQuery, dataset })),
    )

    const ticket = gate.issue()
    api.searchPublications(publicationQuery).then(
      (results) => {
        if (!gate.isCurrent(ticket)) return
        countLabel.textContent = `${results.length} result${results.length === 1 ? '' : 's'}`
        list.innerHTML = ''
        for (const pub of results) list.appendChild(publicationResult(pub))
      },
      (error) => {
        if (!gate.isCurrent(ticket)) return
        countLabel.textContent = `Search failed: ${String(error)}`
      },
    )
  }
}
