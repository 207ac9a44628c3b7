// Shapes of the JSON the catalogue service returns. Kept in sync with the
// Python service by the integration test, not by code generation.

export interface Provider {
  name: string
  category: 'government' | 'commercial' | 'academic'
  region: string
}

export interface Resolution {
  kind: 'length' | 'scale' | 'unspecified'
  min_meters?: number
  max_meters?: number | null
  band?: string | null
  denominator?: number
}

export interface PublicationStub {
  id: string
  title: string
  year: number
}

export interface DatasetStub {
  id: string
  name: string
}

export interface Dataset {
  id: string
  name: string
  providers: Provider[]
  first_available_year: number | null
  update_frequency: string
  still_updated_as_of: number | null
  cost: { access: 'free' | 'paid'; notes: string | null }
  coverage: { region: string; areas: string[] }
  resolutions: Resolution[]
  url: string
  health_applications: string[]
  publication_ids: string[]
  publications: PublicationStub[]
}

export interface Publication {
  id: string
  title: string
  year: number
  journal: string
  journal_category: string
  study_theme: string
  study_topics: string[]
  study_areas: string[]
  link: string
  health_applications: string[]
  dataset_ids: string[]
  datasets: DatasetStub[]
}

export interface Hotspot {
  area: string
  latitude: number
  longitude: number
  flag: string
  dataset_count: number
}

export interface StatsTable {
  title: string
  rows: { label: string; count: number }[]
  total: number
}

export interface Contribution {
  id: string
  kind: 'dataset' | 'publication'
  payload: Record<string, unknown>
  submitter: string | null
  state: 'pending' | 'approved' | 'rejected'
  submitted_at: number
  reviewed_at: number | null
  reviewer_note: string | null
}

export interface ErrorDetail {
  field: string
  row?: number
  message: string
}

export interface ErrorBody {
  error: string
  details: ErrorDetail[]
}
