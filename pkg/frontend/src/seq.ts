// Concurrent in-flight searches are fine, but a slow old response must never
// overwrite a newer one. Each issued request takes a ticket; only the ticket
// matching the latest issue may apply its result.

export class SequenceGate {
  private latest = 0

  issue(): number {
    this.latest += 1
    return this.latest
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.latest
  }
}
