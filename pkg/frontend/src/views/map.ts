import { ApiClient } from '../api'
import { projectPercent } from '../geometry'

export function renderMapView(
  root: HTMLElement,
  api: ApiClient,
  navigate: (hash: string) => void,
): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = 'Coverage hotspots'
  root.appendChild(heading)

  const map = document.createElement('div')
  map.className = 'world-map'
  root.appendChild(map)

  api.getHotspots().then(
    (hotspots) => {
      for (const spot of hotspots) {
        const { x, y } = projectPercent(spot.latitude, spot.longitude)
        const marker = document.createElement('button')
        marker.className = 'hotspot'
        marker.style.left = `${x}%`
        marker.style.top = `${y}%`
        marker.dataset.area = spot.area
        marker.dataset.count = String(spot.dataset_count)
        marker.title = `${spot.area}: ${spot.dataset_count} dataset${spot.dataset_count === 1 ? '' : 's'}`
        marker.textContent = `${flagEmoji(spot.flag)} ${spot.dataset_count}`
        marker.addEventListener('click', () => {
          const params = new URLSearchParams()
          params.append('area', spot.area)
          navigate(`#/search?${params.toString()}`)
        })
        map.appendChild(marker)
      }
    },
    (error) => {
      const message = document.createElement('p')
      message.textContent = `Could not load hotspots: ${String(error)}`
      root.appendChild(message)
    },
  )
}

export function flagEmoji(flag: string): string {
  // two-letter country codes become regional-indicator emoji; anything else
  // (e.g. "globe", "ocean") falls back to a generic symbol
  if (/^[a-z]{2}$/i.test(flag)) {
    const base = 0x1f1e6
    const a = 'a'.charCodeAt(0)
    return (
      String.fromCodePoint(base + flag.toLowerCase().charCodeAt(0) - a) +
      String.fromCodePoint(base + flag.toLowerCase().charCodeAt(1) - a)
    )
  }
  if (flag === 'ocean') return '🌊'
  return '🌐'
}
