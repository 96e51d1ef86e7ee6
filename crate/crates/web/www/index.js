import init, { inspect, decompose, enumerate } from "./pkg/specht_web.js";

const $ = (id) => document.getElementById(id);

function grid(rows, cellClass, cellText) {
  const table = document.createElement("table");
  table.className = "grid";
  rows.forEach((row, i) => {
    const tr = table.insertRow();
    for (let j = 0; j < row.length; j++) {
      const td = tr.insertCell();
      td.className = cellClass(i, j);
      td.textContent = cellText(i, j);
    }
  });
  return table;
}

function para(text, className) {
  const p = document.createElement("p");
  p.textContent = text;
  if (className) p.className = className;
  return p;
}

function wire(form, out, render) {
  $(form).addEventListener("submit", (event) => {
    event.preventDefault();
    const target = $(out);
    target.replaceChildren();
    try {
      render(target);
    } catch (e) {
      target.append(para(e.message ?? String(e), "error"));
    }
  });
}

wire("inspect-form", "inspect-out", (out) => {
  const r = JSON.parse(inspect($("inspect-partition").value, Number($("inspect-p").value)));
  out.append(
    grid(r.hooks, (i, j) => (r.divisible[i][j] ? "hit" : ""), (i, j) => r.hooks[i][j]),
    para(`n = ${r.n}, conjugate ${r.conjugate}, core ${r.core}, weight ${r.weight}`),
    para(`criterion ${r.irreducible ? "holds" : "fails"}; Specht module ${r.specht ? "irreducible" : "reducible"}`),
  );
});

wire("decompose-form", "decompose-out", (out) => {
  const r = JSON.parse(decompose($("decompose-partition").value, Number($("decompose-p").value)));
  out.append(
    grid(r.roles, (i, j) => r.roles[i][j], (i, j) => r.roles[i][j]),
    para(`top ${r.top}, mid ${r.mid}, bottom ${r.bottom}`),
  );
});

wire("enumerate-form", "enumerate-out", (out) => {
  const r = JSON.parse(
    enumerate($("enumerate-core").value, Number($("enumerate-p").value), Number($("enumerate-w").value)),
  );
  const [t, b] = r.residual;
  out.append(para(`n = ${r.n}, residual (${t}, ${b})${r.maximal ? ", bound attained" : ""}: ${r.count} labels`));
  const list = document.createElement("ol");
  for (const item of r.items) {
    const li = document.createElement("li");
    li.textContent = `${item.lambda}    (${item.alpha} | ${item.gamma})`;
    list.append(li);
  }
  out.append(list);
});

await init();
for (const form of ["inspect-form", "decompose-form", "enumerate-form"]) {
  $(form).requestSubmit();
}
