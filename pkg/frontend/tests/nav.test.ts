// @vitest-environment jsdom
import { describe, expect, it } from 'vitest'
import { NARROW_BREAKPOINT_PX, navMode, renderNav } from '../src/nav'

describe('responsive navigation', () => {
  it('switches mode exactly at the breakpoint', () => {
    expect(navMode(NARROW_BREAKPOINT_PX - 1)).toBe('hamburger')
    expect(navMode(NARROW_BREAKPOINT_PX)).toBe('bar')
    expect(navMode(1400)).toBe('bar')
  })

  it('wide viewports get a plain horizontal bar', () => {
    const root = document.createElement('nav')
    renderNav(root, 1024)
    expect(root.className).toBe('nav nav-bar')
    expect(root.querySelector('.hamburger')).toBeNull()
    const links = [...root.querySelectorAll('a')].map((a) => a.textContent)
    expect(links).toEqual(['Search', 'Map', 'Contribute', 'Admin'])
    expect(root.querySelector('ul')!.hidden).toBe(false)
  })

  it('narrow viewports collapse into a hamburger toggle', () => {
    const root = document.createElement('nav')
    renderNav(root, 400)
    expect(root.className).toBe('nav nav-hamburger')
    const button = root.querySelector<HTMLButtonElement>('.hamburger')!
    const list = root.querySelector('ul')!
    expect(list.hidden).toBe(true)
    button.click()
    expect(list.hidden).toBe(false)
    expect(button.getAttribute('aria-expanded')).toBe('true')
    button.click()
    expect(list.hidden).toBe(true)
  })

  it('re-rendering after a resize swaps modes', () => {
    const root = document.createElement('nav')
    renderNav(root, 1024)
    expect(root.querySelector('.hamburger')).toBeNull()
    renderNav(root, 500)
    expect(root.querySelector('.hamburger')).not.toBeNull()
  })
})
