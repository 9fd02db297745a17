// Small DOM builders; no framework.

type Attrs = Record<string, string | number | boolean | ((e: Event) => void) | null | undefined>;

export function el(
  tag: string,
  attrs: Attrs = {},
  ...children: Array<string | Node | null | undefined>
): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (value == null) continue;
    if (key === "className" && typeof value === "string") node.className = value;
    else if (key.startsWith("on") && typeof value === "function")
      node.addEventListener(key.slice(2).toLowerCase(), value as EventListener);
    else node.setAttribute(key, String(value));
  }
  for (const child of children) {
    if (child == null) continue;
    node.appendChild(typeof child === "string" ? document.createTextNode(child) : child);
  }
  return node;
}

export function clear(node: HTMLElement): HTMLElement {
  while (node.firstChild) node.removeChild(node.firstChild);
  return node;
}

export function fmt(x: number, digits = 2): string {
  return x.toFixed(digits);
}
