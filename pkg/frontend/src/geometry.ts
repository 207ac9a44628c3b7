// Equirectangular projection of gazetteer coordinates onto the map image.
// Longitude maps linearly to x and latitude to y; no tile service involved.

export interface Point {
  x: number
  y: number
}

export function project(
  latitude: number,
  longitude: number,
  width: number,
  height: number,
): Point {
  return {
    x: ((longitude + 180) / 360) * width,
    y: ((90 - latitude) / 180) * height,
  }
}

export function projectPercent(latitude: number, longitude: number): Point {
  return project(latitude, longitude, 100, 100)
}
