// Navigation chrome: a horizontal bar on wide viewports, a hamburger toggle
// below the breakpoint.

export const NARROW_BREAKPOINT_PX = 720

export type NavMode = 'bar' | 'hamburger'

export function navMode(viewportWidth: number): NavMode {
  return viewportWidth < NARROW_BREAKPOINT_PX ? 'hamburger' : 'bar'
}

export const NAV_LINKS: { label: string; hash: string }[] = [
  { label: 'Search', hash: '#/search' },
  { label: 'Map', hash: '#/map' },
  { label: 'Contribute', hash: '#/contribute' },
  { label: 'Admin', hash: '#/admin' },
]

export function renderNav(root: HTMLElement, viewportWidth: number): void {
  const mode = navMode(viewportWidth)
  root.innerHTML = ''
  root.className = `nav nav-${mode}`

  const list = document.createElement('ul')
  list.className = 'nav-links'
  for (const link of NAV_LINKS) {
    const item = document.createElement('li')
    const anchor = document.createElement('a')
    anchor.href = link.hash
    anchor.textContent = link.label
    item.appendChild(anchor)
    list.appendChild(item)
  }

  if (mode === 'hamburger') {
    const button = document.createElement('button')
    button.className = 'hamburger'
    button.setAttribute('aria-label', 'open navigation')
    button.setAttribute('aria-expanded', 'false')
    button.textContent = '☰'
    list.hidden = true
    button.addEventListener('click', () => {
      list.hidden = !list.hidden
      button.setAttribute('aria-expanded', String(!list.hidden))
    })
    root.appendChild(button)
  }
  root.appendChild(list)
}

export function installNav(root: HTMLElement): void {
  renderNav(root, window.innerWidth)
  window.addEventListener('resize', () => renderNav(root, window.innerWidth))
}
