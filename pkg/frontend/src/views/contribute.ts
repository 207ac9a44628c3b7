import { ApiClient, ApiError } from '../api'
import {
  DatasetForm,
  datasetFormToPayload,
  FieldError,
  validateDatasetForm,
} from '../validate'

function emptyForm(): DatasetForm {
  return {
    name: '',
    providerName: '',
    providerCategory: '',
    providerRegion: '',
    costAccess: '',
    coverageRegion: '',
    coverageAreas: '',
    url: '',
    healthApplications: '',
  }
}

function field(
  form: HTMLFormElement,
  name: string,
  label: string,
  control: HTMLElement,
): void {
  const wrapper = document.createElement('div')
  wrapper.className = 'field'
  wrapper.dataset.field = name
  const el = document.createElement('label')
  el.textContent = label
  el.appendChild(control)
  const errorSlot = document.createElement('p')
  errorSlot.className = 'field-error'
  wrapper.append(el, errorSlot)
  form.appendChild(wrapper)
}

function input(name: string, onChange: (value: string) => void): HTMLInputElement {
  const el = document.createElement('input')
  el.type = 'text'
  el.name = name
  el.addEventListener('input', () => onChange(el.value))
  return el
}

function select(
  name: string,
  options: [string, string][],
  onChange: (value: string) => void,
): HTMLSelectElement {
  const el = document.createElement('select')
  el.name = name
  for (const [value, label] of options) {
    const option = document.createElement('option')
    option.value = value
    option.textContent = label
    el.appendChild(option)
  }
  el.addEventListener('change', () => onChange(el.value))
  return el
}

export function showFieldErrors(form: HTMLFormElement, errors: FieldError[]): void {
  for (const slot of form.querySelectorAll<HTMLElement>('.field-error')) {
    slot.textContent = ''
  }
  for (const error of errors) {
    const wrapper = form.querySelector<HTMLElement>(
      `.field[data-field="${error.field}"] .field-error`,
    )
    if (wrapper) wrapper.textContent = error.message
  }
}

export function renderContributeView(root: HTMLElement, api: ApiClient): void {
  root.innerHTML = ''
  const heading = document.createElement('h1')
  heading.textContent = 'Contribute a dataset'
  const intro = document.createElement('p')
  intro.textContent =
    'Suggestions are reviewed by a curator before they appear in the catalogue.'
  root.append(heading, intro)

  const state = emptyForm()
  let submitter = ''

  const form = document.createElement('form')
  form.className = 'contribute-form'
  root.appendChild(form)

  field(form, 'name', 'Dataset name *', input('name', (v) => (state.name = v)))
  field(form, 'providerName', 'Provider name *',
    input('providerName', (v) => (state.providerName = v)))
  field(form, 'providerCategory', 'Provider category *',
    select('providerCategory', [
      ['', '—'],
      ['government', 'Government agency'],
      ['commercial', 'Commercial company'],
      ['academic', 'Academic institute'],
    ], (v) => (state.providerCategory = v)))
  field(form, 'providerRegion', 'Provider region *',
    select('providerRegion', [
      ['', '—'], ['asia', 'Asia'], ['europe', 'Europe'],
      ['america', 'America'], ['africa', 'Africa'], ['other', 'Other'],
    ], (v) => (state.providerRegion = v)))
  field(form, 'costAccess', 'Cost *',
    select('costAccess', [['', '—'], ['free', 'Free'], ['paid', 'Paid']],
      (v) => (state.costAccess = v)))
  field(form, 'coverageRegion', 'Coverage region *',
    select('coverageRegion', [
      ['', '—'], ['global', 'Global'], ['americas', 'Americas'],
      ['asia', 'Asia'], ['africa', 'Africa'], ['europe', 'Europe'],
    ], (v) => (state.coverageRegion = v)))
  field(form, 'coverageAreas', 'Covered areas (separate with ;) *',
    input('coverageAreas', (v) => (state.coverageAreas = v)))
  field(form, 'url', 'URL', input('url', (v) => (state.url = v)))
  field(form, 'healthApplications', 'Health applications (separate with ;)',
    input('healthApplications', (v) => (state.healthApplications = v)))
  field(form, 'submitter', 'Your name or email',
    input('submitter', (v) => (submitter = v)))

  const submit = document.createElement('button')
  submit.type = 'submit'
  submit.textContent = 'Submit for review'
  form.appendChild(submit)

  const status = document.createElement('p')
  status.className = 'form-status'
  root.appendChild(status)

  form.addEventListener('submit', (event) => {
    event.preventDefault()
    const errors = validateDatasetForm(state)
    showFieldErrors(form, errors)
    if (errors.length > 0) return // nothing is sent until the form is valid
    api
      .submitContribution('dataset', datasetFormToPayload(state), submitter || undefined)
      .then(
        (result) => {
          root.innerHTML = ''
          const done = document.createElement('h1')
          done.textContent = 'Thank you'
          const message = document.createElement('p')
          message.className = 'confirmation'
          message.textContent =
            `Your suggestion was received (reference ${result.id}) and is ` +
            'awaiting review.'
          root.append(done, message)
        },
        (error) => {
          status.textContent =
            error instanceof ApiError
              ? `Submission rejected: ${error.body.error}`
              : `Submission failed: ${String(error)}`
        },
      )
  })
}
