// Client-side checks for the contribution form. The server re-validates
// everything; this only catches the obvious gaps before a request is sent.

export interface FieldError {
  field: string
  message: string
}

export interface DatasetForm {
  name: string
  providerName: string
  providerCategory: string
  providerRegion: string
  costAccess: string
  coverageRegion: string
  coverageAreas: string
  url: string
  healthApplications: string
}

export interface PublicationForm {
  title: string
  year: string
  journal: string
  journalCategory: string
  studyTheme: string
  link: string
}

export function splitTerms(raw: string): string[] {
  return raw
    .split(';')
    .map((s) => s.trim())
    .filter((s) => s.length > 0)
}

export function validateDatasetForm(form: DatasetForm): FieldError[] {
  const errors: FieldError[] = []
  if (!form.name.trim()) errors.push({ field: 'name', message: 'name is required' })
  if (!form.providerName.trim()) {
    errors.push({ field: 'providerName', message: 'a provider is required' })
  }
  if (!form.providerCategory) {
    errors.push({ field: 'providerCategory', message: 'pick a provider category' })
  }
  if (!form.providerRegion) {
    errors.push({ field: 'providerRegion', message: 'pick a provider region' })
  }
  if (!form.costAccess) {
    errors.push({ field: 'costAccess', message: 'pick free or paid' })
  }
  if (!form.coverageRegion) {
    errors.push({ field: 'coverageRegion', message: 'pick a coverage region' })
  }
  if (splitTerms(form.coverageAreas).length === 0) {
    errors.push({ field: 'coverageAreas', message: 'at least one covered area' })
  }
  return errors
}

export function validatePublicationForm(form: PublicationForm): FieldError[] {
  const errors: FieldError[] = []
  if (!form.title.trim()) errors.push({ field: 'title', message: 'title is required' })
  const year = Number(form.year)
  if (!form.year.trim() || !Number.isInteger(year) || year < 1800 || year > 2100) {
    errors.push({ field: 'year', message: 'year must be a four-digit integer' })
  }
  if (!form.journalCategory) {
    errors.push({ field: 'journalCategory', message: 'pick a journal category' })
  }
  if (!form.studyTheme) {
    errors.push({ field: 'studyTheme', message: 'pick a study theme' })
  }
  return errors
}

export function datasetFormToPayload(form: DatasetForm): Record<string, unknown> {
  return {
    name: form.name.trim(),
    providers: [
      {
        name: form.providerName.trim(),
        category: form.providerCategory,
        region: form.providerRegion,
      },
    ],
    cost: { access: form.costAccess },
    coverage: {
      region: form.coverageRegion,
      areas: splitTerms(form.coverageAreas),
    },
    url: form.url.trim(),
    health_applications: splitTerms(form.healthApplications),
  }
}

export function publicationFormToPayload(
  form: PublicationForm,
): Record<string, unknown> {
  return {
    title: form.title.trim(),
    year: Number(form.year),
    journal: form.journal.trim(),
    journal_category: form.journalCategory,
    study_theme: form.studyTheme,
    link: form.link.trim(),
  }
}
