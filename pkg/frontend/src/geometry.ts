/** Board layout: node coordinates in a unit viewport.
 *
 * The four-sided board renders as the familiar 3x3 grid. Every other
 * board renders as its polygon: corners on an outer circle, midpoints on
 * an inner circle of radius outer * cos(pi / s) (the chord midpoints),
 * center in the middle. Node order follows the wire notation: row-major
 * for s=4, otherwise corner 0, midpoint 0, corner 1, ... with the center
 * last.
 */

export interface Point {
  x: number;
  y: number;
}

export interface BoardLayout {
  nodes: Point[];
  edges: [number, number][];
  span: number; // square viewport side length
}

export const GRID_SPAN = 3;
export const POLYGON_SPAN = 2.6;
const OUTER_RADIUS = 1.0;

export function nodeCount(s: number): number {
  return 2 * s + 1;
}

/** Slide edges, matching the server's board construction. */
export function boardEdges(s: number): [number, number][] {
  const edges: [number, number][] = [];
  const center = 2 * s;
  if (s === 4) {
    for (let a = 0; a < 9; a++) {
      for (let b = a + 1; b < 9; b++) {
        const dr = Math.abs(Math.floor(a / 3) - Math.floor(b / 3));
        const dc = Math.abs((a % 3) - (b % 3));
        if (dr <= 1 && dc <= 1) edges.push([a, b]);
      }
    }
    return edges;
  }
  for (let i = 0; i < s; i++) {
    const corner = 2 * i;
    const midpoint = 2 * i + 1;
    const nextCorner = 2 * ((i + 1) % s);
    const nextMidpoint = 2 * ((i + 1) % s) + 1;
    edges.push([corner, midpoint]);
    edges.push([midpoint, nextCorner]);
    edges.push([midpoint, nextMidpoint]);
  }
  for (let node = 0; node < 2 * s; node++) edges.push([node, center]);
  return edges;
}

export function boardLayout(s: number): BoardLayout {
  if (s === 4) return gridLayout();
  return polygonLayout(s);
}

function gridLayout(): BoardLayout {
  const nodes: Point[] = [];
  for (let i = 0; i < 9; i++) {
    nodes.push({ x: (i % 3) + 0.5, y: Math.floor(i / 3) + 0.5 });
  }
  return { nodes, edges: boardEdges(4), span: GRID_SPAN };
}

function polygonLayout(s: number): BoardLayout {
  const nodes: Point[] = new Array(nodeCount(s));
  const middle = POLYGON_SPAN / 2;
  const midRadius = OUTER_RADIUS * Math.cos(Math.PI / s);
  for (let i = 0; i < s; i++) {
    const cornerAngle = -Math.PI / 2 + (2 * Math.PI * i) / s;
    const midAngle = cornerAngle + Math.PI / s;
    nodes[2 * i] = {
      x: middle + OUTER_RADIUS * Math.cos(cornerAngle),
      y: middle + OUTER_RADIUS * Math.sin(cornerAngle),
    };
    nodes[2 * i + 1] = {
      x: middle + midRadius * Math.cos(midAngle),
      y: middle + midRadius * Math.sin(midAngle),
    };
  }
  nodes[2 * s] = { x: middle, y: middle };
  return { nodes, edges: boardEdges(s), span: POLYGON_SPAN };
}
