import { ApiClient, ApiError } from '../api'
import type { Contribution } from '../types'

function renderLogin(root: HTMLElement, api: ApiClient, onAuthed: () => void): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = 'Catalogue management'
  root.appendChild(heading)

  const form = document.createElement('form')
  form.className = 'login-form'
  const label = document.createElement('label')
  label.textContent = 'Admin token'
  const input = document.createElement('input')
  input.type = 'password'
  input.name = 'token'
  label.appendChild(input)
  const submit = document.createElement('button')
  submit.type = 'submit'
  submit.textContent = 'Sign in'
  const status = document.createElement('p')
  status.className = 'form-status'
  form.append(label, submit, status)
  root.appendChild(form)

  form.addEventListener('submit', (event) => {
    event.preventDefault()
    api.adminToken = input.value
    // probe the token against an admin-only endpoint
    api.adminListContributions().then(
      () => onAuthed(),
      (error) => {
        api.adminToken = null
        status.textContent =
          error instanceof ApiError && error.status === 401
            ? 'Login failed: that token was not accepted.'
            : `Login failed: ${String(error)}`
      },
    )
  })
}

function contributionCard(
  contribution: Contribution,
  api: ApiClient,
  refresh: () => void,
): HTMLElement {
  const card = document.createElement('div')
  card.className = 'contribution'
  card.dataset.contributionId = contribution.id

  const header = document.createElement('h3')
  const name =
    (contribution.payload['name'] as string | undefined) ??
    (contribution.payload['title'] as string | undefined) ??
    '(unnamed)'
  header.textContent = `${contribution.kind}: ${name}`
  card.appendChild(header)

  const meta = document.createElement('p')
  meta.textContent = `submitted by ${contribution.submitter ?? 'anonymous'} · ${contribution.state}`
  card.appendChild(meta)

  const payload = document.createElement('pre')
  payload.textContent = JSON.stringify(contribution.payload, null, 2)
  card.appendChild(payload)

  const status = document.createElement('p')
  status.className = 'form-status'

  if (contribution.state === 'pending') {
    const note = document.createElement('input')
    note.type = 'text'
    note.placeholder = 'review note (optional)'
    const approve = document.createElement('button')
    approve.textContent = 'Approve'
    approve.className = 'approve'
    const reject = document.createElement('button')
    reject.textContent = 'Reject'
    reject.className = 'reject'
    const review = (verdict: 'approve' | 'reject') => {
      api.adminReview(contribution.id, verdict, note.value || undefined).then(
        () => refresh(),
        (error) => {
          status.textContent =
            error instanceof ApiError
              ? `${error.body.error}${error.body.details
                  .map((d) => ` — ${d.field}: ${d.message}`)
                  .join('')}`
              : String(error)
        },
      )
    }
    approve.addEventListener('click', () => review('approve'))
    reject.addEventListener('click', () => review('reject'))
    card.append(note, approve, reject)
  }
  card.appendChild(status)
  return card
}

function renderDashboard(root: HTMLElement, api: ApiClient): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = 'Catalogue management'
  root.appendChild(heading)

  const signOut = document.createElement('button')
  signOut.textContent = 'Sign out'
  signOut.addEventListener('click', () => {
    api.adminToken = null // token lives only in memory
    renderLogin(root, api, () => renderDashboard(root, api))
  })
  root.appendChild(signOut)

  const queueHeading = document.createElement('h2')
  queueHeading.textContent = 'Moderation queue'
  root.appendChild(queueHeading)

  const queue = document.createElement('div')
  queue.className = 'queue'
  root.appendChild(queue)

  const deleteHeading = document.createElement('h2')
  deleteHeading.textContent = 'Delete a record'
  root.appendChild(deleteHeading)

  const deleteForm = document.createElement('form')
  deleteForm.className = 'delete-form'
  const kind = document.createElement('select')
  for (const [value, label] of [
    ['datasets', 'Dataset'],
    ['publications', 'Publication'],
  ] as const) {
    const option = document.createElement('option')
    option.value = value
    option.textContent = label
    kind.appendChild(option)
  }
  const idInput = document.createElement('input')
  idInput.type = 'text'
  idInput.placeholder = 'record id'
  const force = document.createElement('input')
  force.type = 'checkbox'
  const forceLabel = document.createElement('label')
  forceLabel.append(force, ' also unlink references')
  const deleteButton = document.createElement('button')
  deleteButton.type = 'submit'
  deleteButton.textContent = 'Delete'
  const deleteStatus = document.createElement('p')
  deleteStatus.className = 'form-status'
  deleteForm.append(kind, idInput, forceLabel, deleteButton, deleteStatus)
  root.appendChild(deleteForm)

  deleteForm.addEventListener('submit', (event) => {
    event.preventDefault()
    api
      .adminDelete(kind.value as 'datasets' | 'publications', idInput.value, force.checked)
      .then(
        (result) => {
          deleteStatus.textContent = `Deleted ${result.deleted}.`
        },
        (error) => {
          deleteStatus.textContent =
            error instanceof ApiError ? error.body.error : String(error)
        },
      )
  })

  const refresh = () => {
    api.adminListContributions('pending').then(
      (items) => {
        queue.innerHTML = ''
        if (items.length === 0) {
          const empty = document.createElement('p')
          empty.textContent = 'Nothing awaiting review.'
          queue.appendChild(empty)
          return
        }
        for (const item of items) {
          queue.appendChild(contributionCard(item, api, refresh))
        }
      },
      (error) => {
        queue.textContent = `Could not load the queue: ${String(error)}`
      },
    )
  }
  refresh()
}

export function renderAdminView(root: HTMLElement, api: ApiClient): void {
  if (api.adminToken) renderDashboard(root, api)
  else renderLogin(root, api, () => renderDashboard(root, api))
}
