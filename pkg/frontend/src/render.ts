/** SVG board rendering. Stateless: every call redraws from the given
 * server state, badge list, and selection. */

import type { SessionState } from "./api.js";
import type { BoardLayout } from "./geometry.js";
import type { Badge } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_RADIUS = 0.16;
const BADGE_OFFSET = 0.0;

export interface RenderOptions {
  layout: BoardLayout;
  state: SessionState;
  badges: Badge[];
  showBadges: boolean;
  selected: number | null;
  enabled: Set<number>;
  onNodeClick: (node: number) => void;
}

function el(tag: string, attrs: Record<string, string>): SVGElement {
  const element = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    element.setAttribute(key, value);
  }
  return element;
}

export function renderBoard(svg: SVGSVGElement, options: RenderOptions): void {
  const { layout, state, badges, showBadges, selected, enabled } = options;
  const cells = state.notation.split(":")[0];
  svg.innerHTML = "";
  svg.setAttribute("viewBox", `0 0 ${layout.span} ${layout.span}`);

  for (const [a, b] of layout.edges) {
    svg.appendChild(
      el("line", {
        x1: String(layout.nodes[a].x),
        y1: String(layout.nodes[a].y),
        x2: String(layout.nodes[b].x),
        y2: String(layout.nodes[b].y),
        class: "board-edge",
      }),
    );
  }

  const badgeByNode = new Map(badges.map((badge) => [badge.node, badge]));

  cells.split("").forEach((cell, node) => {
    const point = layout.nodes[node];
    const group = el("g", { class: "node-group", "data-node": String(node) });

    const classes = ["node"];
    if (cell === "x") classes.push("stone-x");
    else if (cell === "o") classes.push("stone-o");
    else classes.push("empty");
    if (node === selected) classes.push("selected");
    if (enabled.has(node)) classes.push("enabled");

    group.appendChild(
      el("circle", {
        cx: String(point.x),
        cy: String(point.y),
        r: String(NODE_RADIUS),
        class: classes.join(" "),
      }),
    );

    if (cell !== ".") {
      const mark = el("text", {
        x: String(point.x),
        y: String(point.y),
        class: "stone-mark",
        "text-anchor": "middle",
        "dominant-baseline": "central",
      });
      mark.textContent = cell;
      group.appendChild(mark);
    }

    const badge = badgeByNode.get(node);
    if (showBadges && badge) {
      const label = el("text", {
        x: String(point.x),
        y: String(point.y + BADGE_OFFSET),
        class: `badge badge-${badge.value.kind.toLowerCase()}` +
          (cell === "." ? "" : " badge-on-stone"),
        "text-anchor": "middle",
        "dominant-baseline": "central",
      });
      label.textContent = badgeText(badge);
      if (cell !== ".") {
        label.setAttribute("y", String(point.y - NODE_RADIUS * 1.35));
      }
      group.appendChild(label);
    }

    group.addEventListener("click", () => options.onNodeClick(node));
    svg.appendChild(group);
  });
}

function badgeText(badge: Badge): string {
  const letter =
    badge.value.kind === "DRAW" ? "D" : badge.value.kind === "WIN" ? "W" : "L";
  return badge.value.depth === null ? letter : `${letter}${badge.value.depth}`;
}
