// Built with: wasm-pack build crates/demo-wasm --target web --out-dir www/pkg
import init, { projections, torus, spectrum } from "./pkg/inertia_demo.js";

const $ = (id) => document.getElementById(id);

function show(id, f) {
  const out = $(id);
  try {
    out.textContent = f(JSON.parse.bind(JSON));
    out.className = "";
  } catch (e) {
    out.textContent = String(e);
    out.className = "error";
  }
}

await init();

$("group-go").onclick = () =>
  show("group-out", (parse) => {
    const r = parse(projections($("group").value));
    const lines = [`${r.group} (order ${r.order})`, `I[B ${r.group}] = ${r.inertia.text}`];
    for (const p of r.projections) lines.push(`pi_${p.eigenvalue} = ${p.element.text}`);
    return lines.join("\n");
  });

$("torus-go").onclick = () =>
  show("torus-out", (parse) => {
    const r = parse(torus(Number($("rank").value), $("gens").value));
    return [
      `|Gamma| = ${r.group_order}, orbit sizes ${r.orbits.join(", ")}`,
      `Q_lambda = ${r.detail.base_coefficient}`,
      r.motive,
    ].join("\n");
  });

$("spectrum-go").onclick = () =>
  show("spectrum-out", (parse) => {
    const r = parse(spectrum($("poly").value, $("family").value));
    return r.member ? `${r.summary}\n${r.polynomial} = ${r.factored}` : `${r.polynomial}: not in spectrum`;
  });
