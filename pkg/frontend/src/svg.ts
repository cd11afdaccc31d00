/** Minimal deterministic SVG assembly: fixed canvas, fixed fonts,
 * fixed number formatting, no randomness and no timestamps. */

export const WIDTH = 800;
export const HEIGHT = 500;
export const MARGIN = { left: 70, right: 20, top: 40, bottom: 50 };

export const PALETTE = [
  "#1f4e79",
  "#c23b22",
  "#3a7d44",
  "#8e5ba6",
  "#b8860b",
];

export interface Scale {
  (v: number): number;
  invert: (px: number) => number;
  domain: [number, number];
  log: boolean;
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  fn.invert = (px) => d0 + ((px - r0) / (r1 - r0 || 1)) * span;
  fn.domain = domain;
  fn.log = false;
  return fn;
}

export function logScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  if (domain[0] <= 0 || domain[1] <= 0) {
    throw new Error("log scale requires a positive domain");
  }
  const inner = linearScale(
    [Math.log10(domain[0]), Math.log10(domain[1])],
    range,
  );
  const fn = ((v: number) => inner(Math.log10(v))) as Scale;
  fn.invert = (px) => 10 ** inner.invert(px);
  fn.domain = domain;
  fn.log = true;
  return fn;
}

/** Fixed-precision formatting so output never depends on locale. */
export function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(2);
  return parseFloat(v.toPrecision(6)).toString();
}

function fmtPx(v: number): string {
  return (Math.round(v * 100) / 100).toString();
}

export function ticks(domain: [number, number], n = 6): number[] {
  const [a, b] = domain;
  if (a === b) return [a];
  const raw = (b - a) / n;
  const mag = 10 ** Math.floor(Math.log10(raw));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= raw) ?? mag;
  const out: number[] = [];
  for (let t = Math.ceil(a / step) * step; t <= b + step * 1e-9; t += step) {
    out.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return out;
}

export function logTicks(domain: [number, number]): number[] {
  const out: number[] = [];
  const lo = Math.floor(Math.log10(domain[0]));
  const hi = Math.ceil(Math.log10(domain[1]));
  for (let e = lo; e <= hi; e++) {
    const t = 10 ** e;
    if (t >= domain[0] / (1 + 1e-12) && t <= domain[1] * (1 + 1e-12)) {
      out.push(t);
    }
  }
  return out;
}

export function padDomain(lo: number, hi: number, pad = 0.05): [number, number] {
  if (lo === hi) return [lo - 1, hi + 1];
  const d = (hi - lo) * pad;
  return [lo - d, hi + d];
}

export class SvgCanvas {
  private parts: string[] = [];

  constructor(title?: string) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" ` +
        `height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
        `font-family="DejaVu Sans, Helvetica, sans-serif">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`,
    );
    if (title) {
      this.text(WIDTH / 2, MARGIN.top - 16, title, {
        anchor: "middle",
        size: 16,
      });
    }
  }

  raw(s: string): void {
    this.parts.push(s);
  }

  text(
    x: number,
    y: number,
    content: string,
    opts: { anchor?: string; size?: number; rotate?: boolean } = {},
  ): void {
    const esc = content
      .replace(/&/g, "&amp;")
      .replace(/</g, "&lt;")
      .replace(/>/g, "&gt;");
    const transform = opts.rotate
      ? ` transform="rotate(-90 ${fmtPx(x)} ${fmtPx(y)})"`
      : "";
    this.parts.push(
      `<text x="${fmtPx(x)}" y="${fmtPx(y)}" font-size="${opts.size ?? 12}" ` +
        `text-anchor="${opts.anchor ?? "start"}" fill="#222"${transform}>` +
        `${esc}</text>`,
    );
  }

  polyline(
    xs: number[],
    ys: number[],
    color: string,
    opts: { width?: number; dash?: string } = {},
  ): void {
    const pts: string[] = [];
    for (let i = 0; i < xs.length; i++) {
      if (Number.isFinite(xs[i]) && Number.isFinite(ys[i])) {
        pts.push(`${fmtPx(xs[i])},${fmtPx(ys[i])}`);
      }
    }
    const dash = opts.dash ? ` stroke-dasharray="${opts.dash}"` : "";
    this.parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${color}" ` +
        `stroke-width="${opts.width ?? 1.5}"${dash}/>`,
    );
  }

  circle(x: number, y: number, r: number, color: string): void {
    this.parts.push(
      `<circle cx="${fmtPx(x)}" cy="${fmtPx(y)}" r="${r}" fill="${color}"/>`,
    );
  }

  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.parts.push(
      `<rect x="${fmtPx(x)}" y="${fmtPx(y)}" width="${fmtPx(w)}" ` +
        `height="${fmtPx(h)}" fill="${fill}"/>`,
    );
  }

  axes(
    xScale: Scale,
    yScale: Scale,
    xlabel: string,
    ylabel: string,
  ): void {
    const x0 = MARGIN.left;
    const x1 = WIDTH - MARGIN.right;
    const y0 = HEIGHT - MARGIN.bottom;
    const y1 = MARGIN.top;
    this.raw(
      `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" ` +
        `fill="none" stroke="#444" stroke-width="1"/>`,
    );
    const xt = xScale.log ? logTicks(xScale.domain) : ticks(xScale.domain);
    for (const t of xt) {
      const px = xScale(t);
      this.raw(
        `<line x1="${fmtPx(px)}" y1="${y0}" x2="${fmtPx(px)}" ` +
          `y2="${y0 + 5}" stroke="#444"/>`,
      );
      this.text(px, y0 + 18, fmt(t), { anchor: "middle", size: 11 });
    }
    const yt = yScale.log ? logTicks(yScale.domain) : ticks(yScale.domain);
    for (const t of yt) {
      const py = yScale(t);
      this.raw(
        `<line x1="${x0 - 5}" y1="${fmtPx(py)}" x2="${x0}" ` +
          `y2="${fmtPx(py)}" stroke="#444"/>`,
      );
      this.text(x0 - 8, py + 4, fmt(t), { anchor: "end", size: 11 });
    }
    this.text((x0 + x1) / 2, HEIGHT - 12, xlabel, { anchor: "middle" });
    this.text(18, (y0 + y1) / 2, ylabel, { anchor: "middle", rotate: true });
  }

  legend(entries: { label: string; color: string; dash?: string }[]): void {
    let y = MARGIN.top + 14;
    const x = WIDTH - MARGIN.right - 170;
    for (const e of entries) {
      const dash = e.dash ? ` stroke-dasharray="${e.dash}"` : "";
      this.raw(
        `<line x1="${x}" y1="${y - 4}" x2="${x + 26}" y2="${y - 4}" ` +
          `stroke="${e.color}" stroke-width="2"${dash}/>`,
      );
      this.text(x + 32, y, e.label, { size: 11 });
      y += 16;
    }
  }

  render(): string {
    return [...this.parts, "</svg>", ""].join("\n");
  }
}
